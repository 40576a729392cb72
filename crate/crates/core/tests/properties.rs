mod common;

use std::ops::ControlFlow;

use common::*;
use interval_spectrum::search::{count_proper_colorings, for_each_proper_coloring, SearchBudget, SearchConfig};
use interval_spectrum::{
    build_galaxy, chromatic_index, f_value, galaxy_interval_coloring, galaxy_maximal_coloring, is_proper,
    parse_graph6, recognize_galaxy, uses_all_colors, validate, GalaxyDecomposition, Graph,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=14).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn normalized(a: &[usize]) -> Vec<usize> {
    let rev: Vec<usize> = a.iter().rev().copied().collect();
    if rev < a.to_vec() { rev } else { a.to_vec() }
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph()) {
        let s = g.to_graph6().unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(back.to_graph6().unwrap(), s);
        prop_assert_eq!(back.edge_count(), g.edge_count());
        for &(u, v) in g.edges() {
            prop_assert!(back.edge_between(u, v).is_some());
        }
    }

    #[test]
    fn validated_graphs_are_connected(g in arb_graph()) {
        let degree_sum: usize = (0..g.vertex_count()).map(|x| g.degree(x)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        if let Ok(v) = validate(g) {
            prop_assert_eq!(v.bfs_order(0).len(), v.vertex_count());
        }
    }

    #[test]
    fn galaxy_build_and_recognize(a in proptest::collection::vec(0usize..=3, 1..=5)) {
        let g = build_galaxy(&a).unwrap();
        let spine = a.len() + 2;
        prop_assert_eq!(g.vertex_count(), spine + a.iter().sum::<usize>());
        prop_assert_eq!(g.edge_count(), g.vertex_count() - 1);
        match recognize_galaxy(&g) {
            Ok(GalaxyDecomposition::Spine(s)) => {
                prop_assert_eq!(&s.leaf_counts, &normalized(&a));
                prop_assert_eq!(s.len(), spine);
                prop_assert_eq!(g.degree(s.vertices[0]), 1);
                prop_assert_eq!(g.degree(*s.vertices.last().unwrap()), 1);
                for (i, &x) in s.vertices[1..spine - 1].iter().enumerate() {
                    prop_assert_eq!(g.degree(x), s.leaf_counts[i] + 2);
                    prop_assert_eq!(s.leaves[i].len(), s.leaf_counts[i]);
                }
                for w in s.vertices.windows(2) {
                    prop_assert!(g.edge_between(w[0], w[1]).is_some());
                }
            }
            other => prop_assert!(false, "not recognized: {:?}", other),
        }
    }

    #[test]
    fn galaxy_colorings_are_interval_for_every_t(a in proptest::collection::vec(0usize..=4, 1..=6)) {
        let g = build_galaxy(&a).unwrap();
        let d = recognize_galaxy(&g).unwrap();
        let m = g.edge_count() as u32;
        for t in g.max_degree() as u32..=m {
            let c = galaxy_interval_coloring(&d, t).unwrap();
            prop_assert!(is_proper(&g, &c).unwrap());
            prop_assert!(uses_all_colors(&c).unwrap());
            prop_assert_eq!(f_value(&g, &c).unwrap(), g.vertex_count());
        }
        let top = galaxy_maximal_coloring(&d);
        prop_assert_eq!(top.palette(), m);
        prop_assert!(is_proper(&g, &top).unwrap());
        prop_assert_eq!(f_value(&g, &top).unwrap(), g.vertex_count());
        prop_assert!(galaxy_interval_coloring(&d, m + 1).is_err());
        prop_assert!(galaxy_interval_coloring(&d, g.max_degree() as u32 - 1).is_err());
    }
}

#[test]
fn reflection_preserves_f_on_random_colorings() {
    let graphs: Vec<_> = corpus("connected_n2_5.g6").into_iter().filter(|g| g.edge_count() <= 7).collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let t = rng.gen_range(chromatic_index(g)..=g.edge_count() as u32);
        let total = count_proper_colorings(g, t, &SearchBudget::default(), &SearchConfig::default()).unwrap();
        let pick = rng.gen_range(0..total);
        let mut k = 0;
        let mut chosen = None;
        for_each_proper_coloring(g, t, &SearchBudget::default(), |c| {
            if k == pick {
                chosen = Some(c.clone());
                return ControlFlow::Break(());
            }
            k += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        let c = chosen.unwrap();
        let r = c.reflected();
        assert!(is_proper(g, &r).unwrap() && uses_all_colors(&r).unwrap());
        assert_eq!(f_value(g, &r).unwrap(), f_value(g, &c).unwrap());
        assert!(f_value(g, &c).unwrap() >= g.leaf_count());
    }
}

#[test]
fn every_tree_up_to_six_vertices_is_a_galaxy() {
    let all = corpus("connected_m_le_8.g6");
    for g in all.iter().filter(|g| g.edge_count() + 1 == g.vertex_count() && g.vertex_count() <= 6) {
        assert!(recognize_galaxy(g).is_ok(), "{g:?}");
    }
    // the 7-vertex spider is the smallest tree that is not
    let non_caterpillars = all
        .iter()
        .filter(|g| g.edge_count() + 1 == g.vertex_count() && recognize_galaxy(g).is_err())
        .count();
    assert!(non_caterpillars > 0);
    let spider = edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
    assert!(recognize_galaxy(&spider).is_err());
}

#[test]
fn galaxy_recognition_matches_a_fresh_rebuild() {
    for g in corpus("connected_m_le_8.g6").into_iter().filter(|g| g.vertex_count() <= 8) {
        if let Ok(GalaxyDecomposition::Spine(s)) = recognize_galaxy(&g) {
            let rebuilt = build_galaxy(&s.leaf_counts).unwrap();
            assert_eq!(rebuilt.vertex_count(), g.vertex_count());
            assert_eq!(canonical_form(&rebuilt), canonical_form(&g));
        }
    }
}
