mod common;

use common::{corpus, labeled_copies};
use msc_core::generators::{graph_from_edge_mask, pair_order};
use msc_core::io::{detect_format, edgelist, graph6, parse_documents, GraphFormat};
use msc_core::Graph;
use proptest::prelude::*;

fn any_graph() -> impl Strategy<Value = Graph> {
    (0usize..=40).prop_flat_map(|n| {
        let pairs = pair_order(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(&bits).filter(|(_, b)| **b).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in any_graph()) {
        let code = graph6::emit(&g);
        prop_assert!(code.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::parse_graph6(code.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in any_graph()) {
        prop_assert_eq!(edgelist::parse_edgelist(&edgelist::emit(&g)).unwrap(), g);
    }

    #[test]
    fn small_masks_round_trip(mask in 0u64..(1 << 28)) {
        let g = graph_from_edge_mask(8, mask).unwrap();
        prop_assert_eq!(graph6::parse_graph6(graph6::emit(&g).as_bytes()).unwrap(), g);
    }
}

#[test]
fn large_graph_headers() {
    for n in [62, 63, 64, 100, 5000] {
        let g = Graph::empty(n);
        let code = graph6::emit(&g);
        assert_eq!(graph6::parse_graph6(code.as_bytes()).unwrap().n(), n);
        let header_len = if n <= 62 { 1 } else { 4 };
        assert!(code[header_len..].bytes().all(|b| b == 63));
    }
}

#[test]
fn corpus_has_every_graph_once() {
    let docs = corpus();
    let mut per_n = [0usize; 9];
    let mut copies = [0u64; 9];
    for d in &docs {
        assert_eq!(d.format, GraphFormat::Graph6);
        per_n[d.graph.n()] += 1;
        if d.graph.n() <= 7 {
            copies[d.graph.n()] += labeled_copies(&d.graph);
        }
        assert_eq!(d.emit(), graph6::emit(&d.graph));
    }
    assert_eq!(per_n, [1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
    // Non-isomorphic classes account for every labeled graph exactly once.
    for (n, total) in copies.iter().enumerate().take(8) {
        assert_eq!(*total, 1u64 << (n * n.saturating_sub(1) / 2), "n = {n}");
    }
    let text = std::fs::read_to_string(common::corpus_path()).unwrap();
    for (line, d) in text.lines().zip(&docs) {
        assert_eq!(d.emit(), line);
    }
}

#[test]
fn format_detection_and_ids() {
    assert_eq!(detect_format("DQc\nC~\n"), GraphFormat::Graph6);
    assert_eq!(detect_format("3 2\n0 1\n1 2\n"), GraphFormat::EdgeList);
    let docs = parse_documents(">>graph6<<C~\nA_\n", "x.g6", None).unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0].source_id, "x.g6:0");
    assert_eq!(docs[0].graph.edge_count(), 6);
    assert_eq!(docs[1].graph.edge_count(), 1);
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(graph6::parse_graph6(b"C").is_err());
    assert!(graph6::parse_graph6(b"A`").is_err());
    assert!(graph6::parse_graph6(b"C~~").is_err());
    assert!(edgelist::parse_edgelist("2 1\n0 0\n").is_err());
    assert!(edgelist::parse_edgelist("2 2\n0 1\n1 0\n").is_err());
    assert!(edgelist::parse_edgelist("2 1\n0 2\n").is_err());
    assert!(edgelist::parse_edgelist("3 2\n0 1\n").is_err());
}
