//! Deterministic graph families, labeled enumeration and seeded random graphs.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`enumerate_labeled_graphs`].
pub const LABELED_ENUMERATION_CAP: usize = 7;

/// Named graph families with their size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Complete(usize),
    /// `K_{a,b}`; the first side is `0..a`.
    CompleteBipartite(usize, usize),
    /// Star with `k` leaves around the center `0`.
    Star(usize),
    /// `rows x cols` grid, vertex `r * cols + c`.
    Grid(usize, usize),
}

impl Family {
    pub fn generate(self) -> Result<Graph> {
        let mut edges = Vec::new();
        let n = match self {
            Family::Path(n) => {
                edges.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
                }
                edges.extend((1..n).map(|i| (i - 1, i)));
                edges.push((0, n - 1));
                n
            }
            Family::Complete(n) => {
                for j in 0..n {
                    edges.extend((0..j).map(|i| (i, j)));
                }
                n
            }
            Family::CompleteBipartite(a, b) => {
                for i in 0..a {
                    edges.extend((a..a + b).map(|j| (i, j)));
                }
                a + b
            }
            Family::Star(k) => {
                edges.extend((1..=k).map(|i| (0, i)));
                k + 1
            }
            Family::Grid(rows, cols) => {
                for r in 0..rows {
                    for c in 0..cols {
                        let v = r * cols + c;
                        if c + 1 < cols {
                            edges.push((v, v + 1));
                        }
                        if r + 1 < rows {
                            edges.push((v, v + cols));
                        }
                    }
                }
                rows * cols
            }
        };
        Graph::from_edges(n, &edges)
    }
}

/// Vertex pairs `(i, j)`, `i < j`, in upper-triangle column order:
/// `(0,1), (0,2), (1,2), (0,3), ...`. Bit `k` of an edge mask refers to
/// the `k`-th pair of this list.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Labeled graph whose edge set is given by `mask` in [`pair_order`].
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
    let pairs = pair_order(n);
    if pairs.len() > 64 {
        return Err(Error::ResourceLimit {
            what: "vertex pairs in an edge mask",
            requested: pairs.len(),
            cap: 64,
        });
    }
    if pairs.len() < 64 && mask >> pairs.len() != 0 {
        return Err(Error::invalid(format!(
            "edge mask {mask:#x} has bits beyond the {} pairs of n = {n}",
            pairs.len()
        )));
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges)
}

/// Every labeled simple graph on `n` vertices, in increasing edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Error::check_cap("labeled enumeration vertex count", n, LABELED_ENUMERATION_CAP)?;
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(move |mask| graph_from_edge_mask(n, mask).expect("mask in range")))
}

/// Erdős–Rényi `G(n, p)`; pairs are sampled in [`pair_order`].
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = pair_order(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("pairs in range")
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("tree edges in range")
}
