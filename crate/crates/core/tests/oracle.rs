mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use common::*;
use interval_spectrum::search::{
    count_proper_colorings, exists_interval_coloring, for_each_proper_coloring, mu_bounds_with, mu_table_with,
    MuBounds, SearchBudget, SearchConfig,
};
use interval_spectrum::{chromatic_index, f_value, mu_bounds, mu_table, recognize_galaxy, validate, Graph};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

#[test]
fn frozen_point_values_match_the_naive_oracle() {
    // (graph, t, naive (min f, max f)) frozen from `naive`
    let cases = [
        (cycle(3), 3, (2, 2)),
        (path(4), 3, (3, 4)),
        (path(4), 2, (4, 4)),
        (path(3), 2, (3, 3)),
        (cycle(4), 4, (1, 3)),
        (cycle(4), 3, (2, 4)),
        (cycle(4), 2, (4, 4)),
    ];
    for (g, t, (lo, hi)) in cases {
        let oracle = naive(&g, t);
        assert_eq!((oracle.min_f, oracle.max_f), (Some(lo), Some(hi)), "oracle drifted on {g:?} t={t}");
        assert_eq!(mu_bounds(&g, t, &budget()).unwrap(), MuBounds { mu1: lo, mu2: hi });
    }
    assert_eq!(naive(&cycle(3), 3).count, 6);
    assert_eq!(naive(&path(3), 2).count, 2);
    assert_eq!(naive(&path(4), 3).count, 6);
    assert_eq!(naive(&cycle(4), 3).count, 12);
    assert_eq!(naive(&cycle(4), 4).count, 24);
    assert_eq!(mu_table(&cycle(4), &budget()).unwrap().mu21, 3);
    assert_eq!(mu_table(&path(4), &budget()).unwrap().mu21, 4);
}

#[test]
fn chromatic_index_matches_oracle_and_vizing() {
    for g in corpus("connected_m_le_6.g6") {
        let chi = chromatic_index(&g);
        assert_eq!(chi, naive_chromatic_index(&g), "{g:?}");
        let delta = g.max_degree() as u32;
        assert!(chi == delta || chi == delta + 1);
    }
    for g in corpus("connected_n2_5.g6") {
        let delta = g.max_degree() as u32;
        let chi = chromatic_index(&g);
        assert!(chi == delta || chi == delta + 1);
    }
}

#[test]
fn pruned_enumeration_agrees_with_naive_for_m_up_to_6() {
    for g in corpus("connected_m_le_6.g6") {
        let m = g.edge_count() as u32;
        for t in chromatic_index(&g)..=m {
            let oracle = naive(&g, t);
            let mut visited = 0u64;
            let mut distinct = BTreeSet::new();
            for_each_proper_coloring(&g, t, &budget(), |c| {
                visited += 1;
                distinct.insert(c.colors().to_vec());
                ControlFlow::Continue(())
            })
            .unwrap();
            assert_eq!(visited, oracle.count, "{g:?} t={t}");
            assert_eq!(distinct.len() as u64, visited, "duplicate visit on {g:?} t={t}");
            let counted = count_proper_colorings(&g, t, &budget(), &SearchConfig::default()).unwrap();
            assert_eq!(counted, oracle.count);
            let b = mu_bounds(&g, t, &budget()).unwrap();
            assert_eq!((Some(b.mu1), Some(b.mu2)), (oracle.min_f, oracle.max_f), "{g:?} t={t}");
        }
    }
}

#[test]
fn visited_colorings_are_proper_surjective_and_f_matches() {
    for g in corpus("connected_n2_5.g6").into_iter().filter(|g| g.edge_count() <= 7) {
        for t in chromatic_index(&g)..=g.edge_count() as u32 {
            for_each_proper_coloring(&g, t, &budget(), |c| {
                assert!(naive_proper(&g, c.colors()));
                assert_eq!(f_value(&g, c).unwrap(), naive_f(&g, c.colors()));
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }
}

#[test]
fn reflection_halving_does_not_change_results() {
    let plain = SearchConfig { reflection: false, ..SearchConfig::default() };
    let halved = SearchConfig::default();
    for g in corpus("connected_m_le_8.g6").into_iter().filter(|g| g.edge_count() <= 7) {
        for t in chromatic_index(&g)..=g.edge_count() as u32 {
            let a = mu_bounds_with(&g, t, &budget(), &plain).unwrap();
            let b = mu_bounds_with(&g, t, &budget(), &halved).unwrap();
            assert_eq!(a, b, "{g:?} t={t}");
            let a = count_proper_colorings(&g, t, &budget(), &plain).unwrap();
            let b = count_proper_colorings(&g, t, &budget(), &halved).unwrap();
            assert_eq!(a, b, "{g:?} t={t}");
        }
    }
}

#[test]
fn results_do_not_depend_on_edge_order() {
    for g in corpus("connected_n2_5.g6") {
        let base = mu_table(&g, &budget()).unwrap();
        let mut rev: Vec<_> = g.edges().to_vec();
        rev.reverse();
        let swapped: Vec<_> = rev.iter().map(|&(u, v)| (v, u)).collect();
        for edges in [rev, swapped] {
            let h = validate(Graph::new(g.vertex_count(), edges).unwrap()).unwrap();
            assert_eq!(mu_table(&h, &budget()).unwrap(), base, "{g:?}");
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for g in corpus("connected_n2_5.g6") {
        let one = mu_table_with(&g, &budget(), &SearchConfig::with_workers(1)).unwrap();
        for workers in [2, 4] {
            for split_depth in [1, 3] {
                let cfg = SearchConfig { workers, split_depth, reflection: true };
                assert_eq!(mu_table_with(&g, &budget(), &cfg).unwrap(), one, "{g:?} workers={workers}");
                let t = g.edge_count() as u32;
                assert_eq!(
                    count_proper_colorings(&g, t, &budget(), &cfg).unwrap(),
                    count_proper_colorings(&g, t, &budget(), &SearchConfig::default()).unwrap()
                );
            }
        }
    }
}

#[test]
fn every_palette_in_range_is_realized() {
    for g in corpus("connected_n2_5.g6") {
        for t in chromatic_index(&g)..=g.edge_count() as u32 {
            let k = count_proper_colorings(&g, t, &budget(), &SearchConfig::default()).unwrap();
            assert!(k >= 1, "alpha(G, {t}) empty for {g:?}");
        }
    }
}

#[test]
fn table_invariants() {
    for g in corpus("connected_n2_5.g6") {
        let tab = mu_table(&g, &budget()).unwrap();
        for r in &tab.rows {
            assert!(r.mu1 <= r.mu2 && r.mu2 <= tab.n);
            assert!(r.mu1 >= g.leaf_count(), "leaf floor violated on {g:?}");
        }
        assert_eq!(tab.mu11, tab.rows.iter().map(|r| r.mu1).min().unwrap());
        assert_eq!(tab.mu22, tab.rows.iter().map(|r| r.mu2).max().unwrap());
        assert!(tab.mu21 <= tab.n);
    }
}

#[test]
fn interval_at_m_exactly_for_galaxies() {
    for g in corpus("connected_m_le_8.g6") {
        let galaxy = recognize_galaxy(&g).is_ok();
        let interval = exists_interval_coloring(&g, g.edge_count() as u32, &budget()).unwrap();
        assert_eq!(galaxy, interval, "{g:?}");
    }
}

#[test]
fn fixture_is_the_complete_connected_atlas_up_to_five_vertices() {
    let fixture = corpus("connected_n2_5.g6");
    let forms: BTreeSet<_> = fixture.iter().map(|g| canonical_form(g)).collect();
    assert_eq!(fixture.len(), 30);
    assert_eq!(forms.len(), 30, "duplicate isomorphism class in fixture");

    // every labeled connected graph on 2..=5 vertices falls into one of them
    let mut seen = BTreeSet::new();
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p);
            let g = Graph::new(n, edges).unwrap();
            if g.edge_count() > 0 && g.is_connected() {
                seen.insert(canonical_form(&g));
            }
        }
    }
    assert_eq!(seen, forms);
}
