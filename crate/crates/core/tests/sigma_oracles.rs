mod common;

use common::{fibonacci, grid_sigma, lucas};
use msc_core::generators::{enumerate_labeled_graphs, erdos_renyi, graph_from_edge_mask, pair_order, Family};
use msc_core::sigma::{sigma, sigma_naive, sigma_subset_expansion, SigmaEngine};
use msc_core::{Graph, VertexSet};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0usize..=max_n)
        .prop_flat_map(|n| (Just(n), 0u64..(1u64 << pair_order(n).len())))
        .prop_map(|(n, mask)| graph_from_edge_mask(n, mask).unwrap())
}

#[test]
fn engine_matches_brute_force_exhaustively_up_to_five() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(sigma(&g), sigma_naive(&g).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn engine_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let n = rng.gen_range(6..=10);
        let p = [0.2, 0.5, 0.8][rng.gen_range(0..3)];
        let g = erdos_renyi(n, p, &mut rng);
        assert_eq!(sigma(&g), sigma_naive(&g).unwrap(), "{g:?}");
    }
}

#[test]
fn paths_and_cycles_follow_fibonacci_and_lucas() {
    assert_eq!(fibonacci(6), BigUint::from(8u32));
    assert_eq!(lucas(5), BigUint::from(11u32));
    for n in 3..=25 {
        assert_eq!(sigma(&Family::Path(n).generate().unwrap()), fibonacci(n + 2));
        assert_eq!(sigma(&Family::Cycle(n).generate().unwrap()), lucas(n));
    }
}

#[test]
fn grids_match_transfer_matrix() {
    for rows in 1..=8 {
        for cols in 1..=8 {
            let g = Family::Grid(rows, cols).generate().unwrap();
            assert_eq!(sigma(&g), grid_sigma(rows, cols), "{rows}x{cols}");
        }
    }
    // Long thin grids exercise the wide backend (n >= 128).
    for (rows, cols) in [(50, 3), (80, 2)] {
        let g = Family::Grid(rows, cols).generate().unwrap();
        assert!(g.n() >= 128);
        assert_eq!(sigma(&g), grid_sigma(rows, cols));
    }
}

#[test]
fn complete_bipartite_and_stars() {
    for a in 0..6u32 {
        for b in 0..6u32 {
            let g = Family::CompleteBipartite(a as usize, b as usize).generate().unwrap();
            // independent sets lie within one side
            let expected = (1u64 << a) + (1u64 << b) - 1;
            assert_eq!(sigma(&g), BigUint::from(expected));
        }
    }
    assert_eq!(sigma(&Family::Complete(9).generate().unwrap()), BigUint::from(10u32));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vertex_recurrence_at_every_vertex(g in small_graph(9)) {
        let whole = sigma(&g);
        for v in 0..g.n() {
            let (without, _) = g.delete_vertices(&VertexSet::singleton(v)).unwrap();
            let closed = g.neighbors(v).union(&VertexSet::singleton(v));
            let (without_closed, _) = g.delete_vertices(&closed).unwrap();
            prop_assert_eq!(&whole, &(sigma(&without) + sigma(&without_closed)));
            // deleting a vertex strictly reduces the count
            prop_assert!(sigma(&without) < whole);
        }
    }

    #[test]
    fn multiplicative_over_disjoint_union(g in small_graph(7), h in small_graph(7)) {
        prop_assert_eq!(sigma(&g.disjoint_union(&h)), sigma(&g) * sigma(&h));
    }

    #[test]
    fn subset_expansion_equals_sigma(g in small_graph(10), bits in proptest::collection::vec(any::<bool>(), 10)) {
        let u: VertexSet = (0..g.n()).filter(|&i| bits[i]).collect();
        prop_assert_eq!(sigma_subset_expansion(&g, &u).unwrap(), sigma(&g));
    }

    #[test]
    fn engine_subgraph_queries_match_deletion(g in small_graph(9), bits in proptest::collection::vec(any::<bool>(), 9)) {
        let w: VertexSet = (0..g.n()).filter(|&i| bits[i]).collect();
        let (h, _) = g.delete_vertices(&w).unwrap();
        let mut engine = SigmaEngine::new(&g);
        prop_assert_eq!(engine.sigma_without(&w), sigma(&h));
    }

    #[test]
    fn sigma_at_least_one(g in small_graph(9)) {
        prop_assert!(sigma(&g) >= BigUint::from(1u32));
    }
}

#[test]
fn engine_handles_edgeless_base_case() {
    for k in 0..40 {
        assert_eq!(sigma(&Graph::empty(k)), BigUint::from(1u32) << k);
    }
}
