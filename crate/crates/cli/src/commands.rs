use anyhow::{bail, Result};
use interval_spectrum::search::{mu1, mu2, SearchBudget, SearchConfig, SearchError};
use interval_spectrum::{
    chromatic_index, find_clash, galaxy_interval_coloring, interval_spread, recognize_galaxy, spectrum_summary,
    uses_all_colors, verify_corpus, ConnectedGraph, EdgeColoring, GalaxyDecomposition, GalaxyError, Graph,
    NotGalaxy, TheoremReport, VerifyOptions,
};
use serde::Serialize;
use serde_json::json;

/// Result of a command that ran to completion, mapped to the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    BudgetExceeded,
    Inconsistent,
}

pub fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn edge_names(g: &Graph, edges: &[usize]) -> Vec<String> {
    edges
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            format!("{u}-{v}")
        })
        .collect()
}

fn describe_not_galaxy(g: &Graph, why: &NotGalaxy) -> String {
    match why {
        NotGalaxy::Cycle(edges) => format!("contains cycle [{}]", edge_names(g, edges).join(", ")),
        NotGalaxy::Branching { vertex, inner_neighbors } => format!(
            "vertex {vertex} has {} non-leaf neighbors {inner_neighbors:?}",
            inner_neighbors.len()
        ),
    }
}

fn fmt_seq(a: &[usize]) -> String {
    let parts: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn recognize(g: &ConnectedGraph, json: bool) -> Result<Outcome> {
    let r = recognize_galaxy(g);
    if json {
        let value = match &r {
            Ok(GalaxyDecomposition::K2 { vertices, .. }) => {
                json!({ "galaxy": true, "kind": "K2", "spine": [vertices.0, vertices.1] })
            }
            Ok(GalaxyDecomposition::Spine(s)) => json!({
                "galaxy": true,
                "kind": "spine",
                "n": s.len(),
                "A": s.leaf_counts,
                "spine": s.vertices,
                "leaves": s.leaves,
            }),
            Err(NotGalaxy::Cycle(edges)) => json!({
                "galaxy": false,
                "reason": "cycle",
                "cycle": edges.iter().map(|&e| g.edge(e)).collect::<Vec<_>>(),
            }),
            Err(NotGalaxy::Branching { vertex, inner_neighbors }) => json!({
                "galaxy": false,
                "reason": "branching",
                "vertex": vertex,
                "inner_neighbors": inner_neighbors,
            }),
        };
        print_json(&value)?;
    } else {
        match &r {
            Ok(GalaxyDecomposition::K2 { .. }) => println!("galaxy: K2"),
            Ok(GalaxyDecomposition::Spine(s)) => {
                println!("galaxy: n={}, A={}", s.len(), fmt_seq(&s.leaf_counts));
                let spine: Vec<String> = s.vertices.iter().map(ToString::to_string).collect();
                println!("spine: {}", spine.join(" "));
            }
            Err(why) => println!("not a galaxy: {}", describe_not_galaxy(g, why)),
        }
    }
    Ok(Outcome::Success)
}

#[derive(Debug, Serialize)]
struct RowReport {
    t: u32,
    mu1: Option<usize>,
    mu2: Option<usize>,
    exact: bool,
}

#[derive(Debug, Serialize)]
struct MuReport {
    n: usize,
    m: usize,
    chi_prime: u32,
    exact: bool,
    rows: Vec<RowReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu11: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu12: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu21: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu22: Option<usize>,
}

fn mu_row(g: &ConnectedGraph, t: u32, max_nodes: u64, config: &SearchConfig) -> Result<RowReport> {
    let budget = SearchBudget::new(max_nodes);
    let hi = match mu2(g, t, &budget, config) {
        Ok(v) => v,
        Err(SearchError::BudgetExceeded { mu2, .. }) => return Ok(RowReport { t, mu1: None, mu2, exact: false }),
        Err(e) => return Err(e.into()),
    };
    let budget = SearchBudget::new(max_nodes);
    Ok(match mu1(g, t, &budget, config) {
        Ok(lo) => RowReport { t, mu1: Some(lo), mu2: Some(hi), exact: true },
        Err(SearchError::BudgetExceeded { mu1, .. }) => RowReport { t, mu1, mu2: Some(hi), exact: false },
        Err(e) => return Err(e.into()),
    })
}

/// Each row gets its own budget of `max_nodes`.
pub fn mu(g: &ConnectedGraph, only_t: Option<u32>, max_nodes: u64, config: &SearchConfig, json: bool) -> Result<Outcome> {
    let chi = chromatic_index(g);
    let m = g.edge_count() as u32;
    let ts: Vec<u32> = match only_t {
        Some(t) if t < chi || t > m => bail!("t must be in [{chi}, {m}]"),
        Some(t) => vec![t],
        None => (chi..=m).collect(),
    };
    let rows = ts.into_iter().map(|t| mu_row(g, t, max_nodes, config)).collect::<Result<Vec<_>>>()?;
    let exact = rows.iter().all(|r| r.exact);
    let full = exact && only_t.is_none();
    let agg = |pick: fn(&RowReport) -> Option<usize>, max: bool| -> Option<usize> {
        if !full {
            return None;
        }
        let it = rows.iter().filter_map(pick);
        if max { it.max() } else { it.min() }
    };
    let report = MuReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        chi_prime: chi,
        exact,
        mu11: agg(|r| r.mu1, false),
        mu12: agg(|r| r.mu1, true),
        mu21: agg(|r| r.mu2, false),
        mu22: agg(|r| r.mu2, true),
        rows,
    };

    if json {
        print_json(&report)?;
    } else {
        println!("n={} m={} chi'={}", report.n, report.m, report.chi_prime);
        let show = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
        for r in &report.rows {
            let note = if r.exact { "" } else { " (budget exceeded; best so far)" };
            println!("t={} mu1={} mu2={}{note}", r.t, show(r.mu1), show(r.mu2));
        }
        if full {
            println!(
                "mu11={} mu12={} mu21={} mu22={}",
                show(report.mu11),
                show(report.mu12),
                show(report.mu21),
                show(report.mu22)
            );
        }
    }
    Ok(if exact { Outcome::Success } else { Outcome::BudgetExceeded })
}

pub fn color(g: &ConnectedGraph, t: u32, json: bool) -> Result<Outcome> {
    let d = match recognize_galaxy(g) {
        Ok(d) => d,
        Err(why) => bail!("not a galaxy: {}", describe_not_galaxy(g, &why)),
    };
    let c = match galaxy_interval_coloring(&d, t) {
        Ok(c) => c,
        Err(e @ GalaxyError::PaletteOutOfRange { .. }) => bail!("{e}"),
        Err(e) => bail!("internal error: {e}"),
    };
    let lines: Vec<(usize, usize, u32)> =
        g.edges().iter().zip(c.colors()).map(|(&(u, v), &col)| (u, v, col)).collect();
    if json {
        print_json(&json!({ "t": t, "edges": lines }))?;
    } else {
        for (u, v, col) in lines {
            println!("{u} {v} {col}");
        }
    }
    Ok(Outcome::Success)
}

#[derive(Debug, Serialize)]
struct Clash {
    vertex: usize,
    edges: [(usize, usize); 2],
    color: u32,
}

#[derive(Debug, Serialize)]
struct CheckReport {
    t: u32,
    proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    clash: Option<Clash>,
    surjective: bool,
    f: Option<usize>,
    n: usize,
    interval_coloring: bool,
}

pub fn check(g: &ConnectedGraph, c: &EdgeColoring, json: bool) -> Result<Outcome> {
    let clash = find_clash(g, c)?.map(|(vertex, e1, e2, color)| Clash {
        vertex,
        edges: [g.edge(e1), g.edge(e2)],
        color,
    });
    let proper = clash.is_none();
    let surjective = uses_all_colors(c)?;
    let f = if proper {
        Some(spectrum_summary(g, c)?.iter().filter(|s| s.is_interval).count())
    } else {
        None
    };
    let n = g.vertex_count();
    let report = CheckReport {
        t: c.palette(),
        proper,
        clash,
        surjective,
        f,
        n,
        interval_coloring: proper && surjective && f == Some(n),
    };
    if json {
        print_json(&report)?;
    } else {
        let yn = |b: bool| if b { "yes" } else { "no" };
        match &report.clash {
            None => println!("proper: yes"),
            Some(k) => println!(
                "proper: no (vertex {}: edges {}-{} and {}-{} share color {})",
                k.vertex, k.edges[0].0, k.edges[0].1, k.edges[1].0, k.edges[1].1, k.color
            ),
        }
        println!("surjective: {} (t = {})", yn(report.surjective), report.t);
        match report.f {
            Some(f) => println!("f: {f} of {n}"),
            None => println!("f: undefined for an improper coloring"),
        }
        println!("interval coloring: {}", yn(report.interval_coloring));
    }
    Ok(Outcome::Success)
}

pub fn spread(g: &ConnectedGraph, max_nodes: u64, json: bool) -> Result<Outcome> {
    let budget = SearchBudget::new(max_nodes);
    let s = interval_spread(g, &budget)?;
    if json {
        print_json(&json!({
            "chi_prime": s.chi_prime,
            "m": s.m,
            "feasible": s.feasible,
            "indeterminate": s.indeterminate,
            "exact": s.is_exact(),
            "interval_colorable": !s.feasible.is_empty(),
            "w": s.w(),
            "W": s.W(),
        }))?;
    } else {
        let list: Vec<String> = s.feasible.iter().map(ToString::to_string).collect();
        println!("feasible t in [{}, {}]: {{{}}}", s.chi_prime, s.m, list.join(", "));
        match (s.w(), s.W()) {
            (Some(w), Some(big_w)) => println!("w = {w}, W = {big_w}"),
            _ => println!("no interval coloring"),
        }
        if !s.is_exact() {
            println!("undecided within budget: {:?}", s.indeterminate);
        }
    }
    Ok(if s.is_exact() { Outcome::Success } else { Outcome::BudgetExceeded })
}

pub fn verify_theorem(corpus: &str, opts: &VerifyOptions, json: bool) -> Result<Outcome> {
    let report: TheoremReport = verify_corpus(corpus, opts)?;
    for s in &report.skipped {
        eprintln!("warning: skipping record {} ({}): {}", s.index, s.graph6, s.reason);
    }
    for v in report.graphs.iter().filter(|v| v.is_inconsistent()) {
        eprintln!("INCONSISTENT: record {} ({}): galaxy={} mu21={:?} n={}", v.index, v.graph6, v.is_galaxy, v.mu21, v.n);
    }
    if json {
        print_json(&report)?;
    } else {
        for v in &report.graphs {
            let mu21 = v.mu21.value().map_or("budget-exceeded".to_string(), |x| x.to_string());
            let verdict = match v.consistent {
                Some(true) => "consistent",
                Some(false) => "INCONSISTENT",
                None => "undecided",
            };
            let mut line = format!(
                "#{:<4} {:<12} n={} m={} chi'={} {} mu21={} {}",
                v.index,
                v.graph6,
                v.n,
                v.m,
                v.chi_prime,
                if v.is_galaxy { "galaxy" } else { "non-galaxy" },
                mu21,
                verdict
            );
            if let Some(p) = &v.prop2 {
                let at_m = p.interval_at_m.map_or("?".to_string(), |b| b.to_string());
                line.push_str(&format!(" interval@m={at_m}"));
            }
            println!("{line}");
            if let Some(rows) = &v.rows {
                for r in rows {
                    println!("      t={} mu1={} mu2={}", r.t, r.mu1, r.mu2);
                }
            }
        }
        let s = &report.summary;
        println!(
            "graphs={} galaxies={} non_galaxies={} inconsistencies={} budget_failures={} skipped={}",
            s.graphs, s.galaxies, s.non_galaxies, s.inconsistencies, s.budget_failures, s.skipped
        );
    }
    Ok(if report.summary.inconsistencies > 0 {
        Outcome::Inconsistent
    } else if report.summary.budget_failures > 0 {
        Outcome::BudgetExceeded
    } else {
        Outcome::Success
    })
}
