//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use msc_core::io::{load_graphs, GraphDocument, GraphFormat};
use msc_core::{Graph, VertexSet};
use num_bigint::BigUint;

pub fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/graphs_upto8.g6")
}

/// All non-isomorphic graphs on 0..=8 vertices.
pub fn corpus() -> Vec<GraphDocument> {
    load_graphs(corpus_path().to_str().unwrap(), Some(GraphFormat::Graph6)).unwrap()
}

/// F(0) = 0, F(1) = 1.
pub fn fibonacci(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(0u32), BigUint::from(1u32));
    for _ in 0..k {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// L(0) = 2, L(1) = 1.
pub fn lucas(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::from(1u32));
    for _ in 0..k {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Independent sets of the `rows x cols` grid by a row transfer matrix.
pub fn grid_sigma(rows: usize, cols: usize) -> BigUint {
    let patterns: Vec<u32> = (0u32..1 << cols).filter(|p| p & (p >> 1) == 0).collect();
    let mut ways: Vec<BigUint> = vec![BigUint::from(1u32); patterns.len()];
    for _ in 1..rows {
        ways = patterns
            .iter()
            .map(|&p| {
                patterns
                    .iter()
                    .zip(&ways)
                    .filter(|(&q, _)| p & q == 0)
                    .map(|(_, w)| w.clone())
                    .sum()
            })
            .collect();
    }
    if rows == 0 {
        return BigUint::from(1u32);
    }
    ways.into_iter().sum()
}

/// Every simple path by unpruned depth-first search, then filtered by the
/// induced A-B-path definition.
pub fn brute_force_induced_paths(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for x in g.neighbors(last).iter() {
            if !path.contains(&x) {
                path.push(x);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut all = Vec::new();
    for s in 0..g.n() {
        extend(g, &mut vec![s], &mut all);
    }
    let mut keep: Vec<Vec<usize>> = all
        .into_iter()
        .filter(|p| {
            let in_a: Vec<_> = p.iter().filter(|v| a.contains(**v)).collect();
            let in_b: Vec<_> = p.iter().filter(|v| b.contains(**v)).collect();
            in_a == vec![&p[0]]
                && in_b == vec![p.last().unwrap()]
                && (0..p.len()).all(|i| {
                    (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1))
                })
        })
        .collect();
    keep.sort();
    keep
}

/// `n! / |Aut(G)|`, the number of labeled copies, by brute force over
/// all vertex permutations.
pub fn labeled_copies(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let edges = g.edges();
    let mut automorphisms = 0u64;
    let mut total = 0u64;
    loop {
        total += 1;
        if edges.iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
            automorphisms += 1;
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    total / automorphisms
}
