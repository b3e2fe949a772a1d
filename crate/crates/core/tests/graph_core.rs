use msc_core::generators::{enumerate_labeled_graphs, erdos_renyi, graph_from_edge_mask, pair_order};
use msc_core::{Distance, Graph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..=9).prop_flat_map(|n| {
        let pairs = pair_order(n).len() as u32;
        (Just(n), 0u64..(1u64 << pairs))
    })
    .prop_map(|(n, mask)| graph_from_edge_mask(n, mask).unwrap())
}

fn graph_with_two_sets() -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    small_graph().prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(g, x, y)| {
                let a = (0..x.len()).filter(|&i| x[i]).collect();
                let b = (0..y.len()).filter(|&i| y[i]).collect();
                (g, a, b)
            })
    })
}

fn assert_simple(g: &Graph) {
    for u in 0..g.n() {
        assert!(!g.has_edge(u, u));
        for v in g.neighbors(u).iter() {
            assert!(v < g.n());
            assert!(g.has_edge(v, u));
        }
    }
}

proptest! {
    #[test]
    fn deletion_keeps_the_rest((g, w, _) in graph_with_two_sets()) {
        let (h, map) = g.delete_vertices(&w).unwrap();
        prop_assert_eq!(h.n(), g.n() - w.len());
        assert_simple(&h);
        for x in 0..h.n() {
            for y in 0..h.n() {
                prop_assert_eq!(h.has_edge(x, y), g.has_edge(map.original(x), map.original(y)));
            }
        }
        // order preserving
        prop_assert!(map.new_to_old().windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn deletion_composes((g, w1, w2) in graph_with_two_sets()) {
        let w2 = w2.difference(&w1);
        let (first, map) = g.delete_vertices(&w1).unwrap();
        let (twice, _) = first.delete_vertices(&map.map_set(&w2)).unwrap();
        let (once, _) = g.delete_vertices(&w1.union(&w2)).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn distance_symmetric_and_adjacency(g in small_graph()) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                let d = g.distance(u, v).unwrap();
                prop_assert_eq!(d, g.distance(v, u).unwrap());
                prop_assert_eq!(d == Distance::Finite(1), g.has_edge(u, v));
                prop_assert_eq!(d == Distance::Finite(0), u == v);
            }
        }
    }

    #[test]
    fn split_partitions_vertices((g, a, b) in graph_with_two_sets()) {
        let s = g.split_by_sets(&a, &b).unwrap();
        let parts = [&s.part_a, &s.part_b, &s.part_ab, &s.part_star];
        let total: usize = parts.iter().map(|p| p.len()).sum();
        prop_assert_eq!(total, g.n());
        let union = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p));
        prop_assert_eq!(union, g.vertices());
        prop_assert!(s.part_a.is_disjoint(&b) && s.part_b.is_disjoint(&a));
        prop_assert!(s.part_star.is_disjoint(&a) && s.part_star.is_disjoint(&b));
        for comp in g.connected_components() {
            let inside = parts.iter().filter(|p| comp.is_subset(p)).count();
            prop_assert_eq!(inside, 1);
        }
    }

    #[test]
    fn neighborhood_is_union_of_neighbors((g, w, _) in graph_with_two_sets()) {
        let nb = g.neighborhood(&w).unwrap();
        for x in 0..g.n() {
            prop_assert_eq!(nb.contains(x), w.iter().any(|v| g.has_edge(v, x)));
        }
    }
}

#[test]
fn labeled_enumeration_counts_and_invariants() {
    for n in 0..=6usize {
        let mut count = 0u64;
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(g.n(), n);
            assert_simple(&g);
            count += 1;
        }
        assert_eq!(count, 1u64 << (n * n.saturating_sub(1) / 2));
    }
}

#[test]
fn components_are_ordered_and_connected() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let g = erdos_renyi(12, 0.12, &mut rng);
        let comps = g.connected_components();
        let mins: Vec<usize> = comps.iter().map(|c| c.min().unwrap()).collect();
        assert!(mins.windows(2).all(|w| w[0] < w[1]));
        for c in &comps {
            let root = c.min().unwrap();
            for v in c.iter() {
                assert!(g.distance(root, v).unwrap().finite().is_some());
            }
        }
    }
}
