//! Shared by the integration tests and the CLI acceptance suite: corpus
//! loading and a brute-force oracle that never touches the search engine.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use interval_spectrum::{parse_graph6, validate, ConnectedGraph, Graph};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

/// Every record of a fixture file that passes validation.
pub fn corpus(name: &str) -> Vec<ConnectedGraph> {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture present");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .filter_map(|l| validate(parse_graph6(l).expect("fixture parses")).ok())
        .collect()
}

pub fn edge_list(n: usize, edges: &[(usize, usize)]) -> ConnectedGraph {
    validate(Graph::new(n, edges.iter().copied()).unwrap()).unwrap()
}

pub fn path(k: usize) -> ConnectedGraph {
    let e: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    edge_list(k, &e)
}

pub fn cycle(k: usize) -> ConnectedGraph {
    let e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edge_list(k, &e)
}

pub fn star(leaves: usize) -> ConnectedGraph {
    let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    edge_list(leaves + 1, &e)
}

pub fn complete(k: usize) -> ConnectedGraph {
    let mut e = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            e.push((i, j));
        }
    }
    edge_list(k, &e)
}

/// Result of filtering all `t^m` assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Naive {
    pub count: u64,
    pub min_f: Option<usize>,
    pub max_f: Option<usize>,
}

/// f by explicit spectrum sets.
pub fn naive_f(g: &Graph, colors: &[u32]) -> usize {
    (0..g.vertex_count())
        .filter(|&x| {
            let s: BTreeSet<u32> = g.neighbors(x).iter().map(|&(_, e)| colors[e]).collect();
            match (s.first(), s.last()) {
                (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == s.len(),
                _ => false,
            }
        })
        .count()
}

pub fn naive_proper(g: &Graph, colors: &[u32]) -> bool {
    let m = g.edge_count();
    for a in 0..m {
        for b in a + 1..m {
            let (u, v) = g.edge(a);
            let (x, y) = g.edge(b);
            let share = u == x || u == y || v == x || v == y;
            if share && colors[a] == colors[b] {
                return false;
            }
        }
    }
    true
}

/// Enumerates every map `E -> {1..t}` and keeps the proper surjective ones.
pub fn naive(g: &Graph, t: u32) -> Naive {
    let m = g.edge_count();
    let mut colors = vec![1u32; m];
    let mut out = Naive { count: 0, min_f: None, max_f: None };
    loop {
        let used: BTreeSet<u32> = colors.iter().copied().collect();
        if used.len() == t as usize && naive_proper(g, &colors) {
            let f = naive_f(g, &colors);
            out.count += 1;
            out.min_f = Some(out.min_f.map_or(f, |v| v.min(f)));
            out.max_f = Some(out.max_f.map_or(f, |v| v.max(f)));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if colors[i] < t {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Least `t` with a proper (not necessarily surjective) `t`-coloring.
pub fn naive_chromatic_index(g: &Graph) -> u32 {
    (1..=g.edge_count() as u32).find(|&t| naive(g, t).count > 0).expect("t = m always works")
}

/// Canonical form by minimizing the adjacency bit string over all labelings.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut bits = Vec::with_capacity(n * n);
        for j in 1..n {
            for i in 0..j {
                bits.push(g.edge_between(perm[i], perm[j]).is_some());
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
