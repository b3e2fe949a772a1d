mod common;

use common::brute_force_induced_paths;
use msc_core::generators::{enumerate_labeled_graphs, graph_from_edge_mask, pair_order, Family};
use msc_core::paths::{
    classify_parity, enumerate_induced_ab_paths, first_mixed_pair, is_bipartite, is_parity_graph,
    parity_flip_check, ParityClass,
};
use msc_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    (1usize..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                0u64..(1u64 << pair_order(n).len()),
                proptest::collection::vec(0u8..4, n),
                0..n,
                0..n,
            )
        })
        .prop_map(|(n, mask, roles, x, y)| {
            let g = graph_from_edge_mask(n, mask).unwrap();
            let mut a: VertexSet = (0..n).filter(|&i| roles[i] & 1 == 1).collect();
            let mut b: VertexSet = (0..n).filter(|&i| roles[i] & 2 == 2).collect();
            a.insert(x);
            b.insert(y);
            (g, a, b)
        })
}

fn class_of(paths: &[Vec<usize>]) -> ParityClass {
    let even = paths.iter().any(|p| (p.len() - 1) % 2 == 0);
    let odd = paths.iter().any(|p| (p.len() - 1) % 2 == 1);
    match (even, odd) {
        (true, true) => ParityClass::Mixed,
        (true, false) => ParityClass::Even,
        (false, true) => ParityClass::Odd,
        (false, false) => ParityClass::Infinite,
    }
}

fn parity_graph_oracle(g: &Graph) -> bool {
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| {
            let paths = brute_force_induced_paths(g, &VertexSet::singleton(u), &VertexSet::singleton(v));
            class_of(&paths) != ParityClass::Mixed
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn enumeration_matches_brute_force((g, a, b) in graph_and_sets(8)) {
        let found: Vec<Vec<usize>> = enumerate_induced_ab_paths(&g, &a, &b)
            .unwrap()
            .map(|p| p.vertices)
            .collect();
        prop_assert_eq!(&found, &brute_force_induced_paths(&g, &a, &b));
    }

    #[test]
    fn enumerated_paths_are_induced((g, a, b) in graph_and_sets(10)) {
        for p in enumerate_induced_ab_paths(&g, &a, &b).unwrap() {
            prop_assert!(p.is_chord_free_in(&g));
            prop_assert!(a.contains(p.vertices[0]));
            prop_assert!(b.contains(*p.vertices.last().unwrap()));
            let inner_a = p.vertices[1..].iter().any(|&v| a.contains(v));
            let inner_b = p.vertices[..p.vertices.len() - 1].iter().any(|&v| b.contains(v));
            prop_assert!(!inner_a && !inner_b);
        }
    }

    #[test]
    fn classification_matches_brute_force((g, a, b) in graph_and_sets(8)) {
        prop_assert_eq!(
            classify_parity(&g, &a, &b).unwrap(),
            class_of(&brute_force_induced_paths(&g, &a, &b))
        );
    }

    #[test]
    fn finite_distance_means_some_path((g, _, _) in graph_and_sets(9)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                let class = classify_parity(&g, &VertexSet::singleton(u), &VertexSet::singleton(v)).unwrap();
                let connected = g.distance(u, v).unwrap().finite().is_some();
                prop_assert_eq!(class == ParityClass::Infinite, !connected);
            }
        }
    }

    #[test]
    fn flip_lemma((g, a, b) in graph_and_sets(9)) {
        let b = b.difference(&a);
        if b.is_empty() {
            return Ok(());
        }
        let class = classify_parity(&g, &a, &b).unwrap();
        if matches!(class, ParityClass::Even | ParityClass::Odd) {
            let report = parity_flip_check(&g, &a, &b).unwrap();
            prop_assert!(report.holds(), "{:?}", report);
            prop_assert_eq!(report.class, class);
        }
    }
}

#[test]
fn parity_recognition_matches_brute_force_up_to_six() {
    for n in 0..=6 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let fast = is_parity_graph(&g).unwrap();
            assert_eq!(fast, parity_graph_oracle(&g), "{g:?}");
            assert_eq!(fast, first_mixed_pair(&g).is_none());
            if is_bipartite(&g) {
                assert!(fast, "bipartite but not parity: {g:?}");
            }
        }
    }
}

#[test]
fn bipartite_path_lengths_follow_distance() {
    for n in 1..=6 {
        for g in enumerate_labeled_graphs(n).unwrap().filter(is_bipartite) {
            for u in 0..n {
                for v in 0..n {
                    let class = classify_parity(&g, &VertexSet::singleton(u), &VertexSet::singleton(v)).unwrap();
                    let expected = match g.distance(u, v).unwrap().finite() {
                        None => ParityClass::Infinite,
                        Some(d) if d % 2 == 0 => ParityClass::Even,
                        Some(_) => ParityClass::Odd,
                    };
                    assert_eq!(class, expected);
                }
            }
        }
    }
}

#[test]
fn bipartite_detection() {
    assert!(is_bipartite(&Family::Cycle(6).generate().unwrap()));
    assert!(!is_bipartite(&Family::Cycle(7).generate().unwrap()));
    assert!(is_bipartite(&Family::Grid(4, 5).generate().unwrap()));
    assert!(!is_bipartite(&Family::Complete(3).generate().unwrap()));
    // odd cycles from 5 on are not parity graphs, triangles are
    assert!(is_parity_graph(&Family::Complete(3).generate().unwrap()).unwrap());
    assert!(!is_parity_graph(&Family::Cycle(5).generate().unwrap()).unwrap());
}

#[test]
fn shared_vertex_is_length_zero_path() {
    let g = Family::Path(3).generate().unwrap();
    let a = VertexSet::from([1]);
    let paths: Vec<_> = enumerate_induced_ab_paths(&g, &a, &a).unwrap().collect();
    assert_eq!(paths.len(), 1);
    assert!(paths[0].is_empty());
    assert!(enumerate_induced_ab_paths(&g, &VertexSet::new(), &a).is_err());
}
