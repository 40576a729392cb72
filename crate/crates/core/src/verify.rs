//! Corpus runs checking `mu21(G) = |V(G)|` against galaxy recognition, and
//! optionally interval colorability at `t = |E(G)|`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::chromatic_index;
use crate::galaxy::recognize_galaxy;
use crate::graph::{parse_graph6, validate, ConnectedGraph, GraphError};
use crate::search::{
    exists_interval_coloring_with, mu2, mu_bounds_with, MuRow, SearchBudget, SearchConfig, SearchError,
    DEFAULT_MAX_NODES,
};

#[derive(Debug, Error)]
#[error("corpus line {line}: {source}")]
pub struct VerifyError {
    pub line: usize,
    pub source: GraphError,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BudgetExceeded {
    #[serde(rename = "budget-exceeded")]
    BudgetExceeded,
}

/// `mu21` as reported: a value, or the `"budget-exceeded"` marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Mu21 {
    Exact(usize),
    Unknown(BudgetExceeded),
}

impl Mu21 {
    pub fn value(self) -> Option<usize> {
        match self {
            Mu21::Exact(v) => Some(v),
            Mu21::Unknown(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop2Verdict {
    /// Interval coloring with `t = m` exists; `None` on budget exhaustion.
    pub interval_at_m: Option<bool>,
    pub consistent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerdict {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi_prime: u32,
    pub is_galaxy: bool,
    pub mu21: Mu21,
    /// `is_galaxy == (mu21 == n)`; `None` when `mu21` is unknown.
    pub consistent: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prop2: Option<Prop2Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<MuRow>>,
}

impl GraphVerdict {
    pub fn is_inconsistent(&self) -> bool {
        self.consistent == Some(false) || self.prop2.as_ref().is_some_and(|p| p.consistent == Some(false))
    }

    pub fn budget_failed(&self) -> bool {
        self.consistent.is_none() || self.prop2.as_ref().is_some_and(|p| p.consistent.is_none())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub galaxies: usize,
    pub non_galaxies: usize,
    pub inconsistencies: usize,
    pub budget_failures: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub graphs: Vec<GraphVerdict>,
    pub skipped: Vec<Skipped>,
    pub summary: Summary,
}

impl TheoremReport {
    /// No inconsistencies and no budget failures.
    pub fn is_clean(&self) -> bool {
        self.summary.inconsistencies == 0 && self.summary.budget_failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Node budget, fresh for each graph and each check.
    pub max_nodes: u64,
    pub prop2: bool,
    /// Record full `(t, mu1, mu2)` rows.
    pub verbose: bool,
    /// Graphs checked concurrently.
    pub jobs: usize,
    pub search: SearchConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_nodes: DEFAULT_MAX_NODES,
            prop2: false,
            verbose: false,
            jobs: 1,
            search: SearchConfig::default(),
        }
    }
}

/// Checks one validated graph.
pub fn verify_graph(index: usize, g: &ConnectedGraph, opts: &VerifyOptions) -> GraphVerdict {
    let n = g.vertex_count();
    let m = g.edge_count();
    let chi = chromatic_index(g);
    let is_galaxy = recognize_galaxy(g).is_ok();

    let budget = SearchBudget::new(opts.max_nodes);
    let mut rows = Vec::new();
    let mut mu21 = Some(usize::MAX);
    for t in chi..=m as u32 {
        let row = if opts.verbose {
            mu_bounds_with(g, t, &budget, &opts.search).map(|b| MuRow { t, mu1: b.mu1, mu2: b.mu2 })
        } else {
            mu2(g, t, &budget, &opts.search).map(|v| MuRow { t, mu1: 0, mu2: v })
        };
        match row {
            Ok(r) => {
                mu21 = mu21.map(|cur| cur.min(r.mu2));
                rows.push(r);
            }
            Err(SearchError::BudgetExceeded { .. }) => {
                mu21 = None;
                break;
            }
            Err(e) => panic!("t within [chi', m] was rejected: {e}"),
        }
    }
    let consistent = mu21.map(|v| is_galaxy == (v == n));

    let prop2 = opts.prop2.then(|| {
        let budget = SearchBudget::new(opts.max_nodes);
        let interval_at_m = match exists_interval_coloring_with(g, m as u32, &budget, &opts.search) {
            Ok(b) => Some(b),
            Err(SearchError::BudgetExceeded { .. }) => None,
            Err(e) => panic!("t = m was rejected: {e}"),
        };
        Prop2Verdict { interval_at_m, consistent: interval_at_m.map(|b| b == is_galaxy) }
    });

    GraphVerdict {
        index,
        graph6: g.to_graph6().unwrap_or_default(),
        n,
        m,
        chi_prime: chi,
        is_galaxy,
        mu21: mu21.map_or(Mu21::Unknown(BudgetExceeded::BudgetExceeded), Mu21::Exact),
        consistent,
        prop2,
        rows: opts.verbose.then_some(rows),
    }
}

enum Entry {
    Graph(usize, String, ConnectedGraph),
    Skip(Skipped),
}

/// Runs [`verify_graph`] over every graph6 record in `corpus`. Blank lines
/// are ignored; disconnected and edgeless graphs are skipped; malformed
/// records abort the run. Verdicts come back in input order.
pub fn verify_corpus(corpus: &str, opts: &VerifyOptions) -> Result<TheoremReport, VerifyError> {
    let mut entries = Vec::new();
    let mut index = 0;
    for (i, line) in corpus.lines().enumerate() {
        let rec = line.trim();
        if rec.is_empty() || rec.starts_with('#') {
            continue;
        }
        let g = parse_graph6(rec).map_err(|source| VerifyError { line: i + 1, source })?;
        entries.push(match validate(g) {
            Ok(g) => Entry::Graph(index, rec.to_string(), g),
            Err(e) => Entry::Skip(Skipped { index, graph6: rec.to_string(), reason: e.to_string() }),
        });
        index += 1;
    }

    let work: Vec<(usize, &str, &ConnectedGraph)> = entries
        .iter()
        .filter_map(|e| match e {
            Entry::Graph(i, rec, g) => Some((*i, rec.as_str(), g)),
            Entry::Skip(_) => None,
        })
        .collect();
    let slots: Vec<Mutex<Option<GraphVerdict>>> = work.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..opts.jobs.max(1) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(index, rec, g)) = work.get(k) else { break };
                let mut verdict = verify_graph(index, g, opts);
                verdict.graph6 = rec.to_string();
                *slots[k].lock().expect("verdict slot poisoned") = Some(verdict);
            });
        }
    });
    let graphs: Vec<GraphVerdict> = slots
        .into_iter()
        .map(|s| s.into_inner().expect("verdict slot poisoned").expect("every graph was checked"))
        .collect();
    let skipped: Vec<Skipped> = entries
        .into_iter()
        .filter_map(|e| match e {
            Entry::Skip(s) => Some(s),
            Entry::Graph(..) => None,
        })
        .collect();

    let summary = Summary {
        graphs: graphs.len(),
        galaxies: graphs.iter().filter(|v| v.is_galaxy).count(),
        non_galaxies: graphs.iter().filter(|v| !v.is_galaxy).count(),
        inconsistencies: graphs.iter().filter(|v| v.is_inconsistent()).count(),
        budget_failures: graphs.iter().filter(|v| v.budget_failed()).count(),
        skipped: skipped.len(),
    };
    Ok(TheoremReport { graphs, skipped, summary })
}
