//! Induced A-B-paths, their parity, and parity-graph recognition.
//!
//! An induced A-B-path `(v1, ..., vk)` meets `A` exactly in `v1`, meets `B`
//! exactly in `vk`, and has an edge `{vi, vj}` iff `|i - j| = 1`. A vertex of
//! `A ∩ B` on its own is an induced path of length 0.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sigma::enumerate_independent_subsets;
use crate::vertex_set::{Mask, VertexSet};

/// Default vertex cap for [`is_parity_graph`].
pub const PARITY_GRAPH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InducedPath {
    pub vertices: Vec<usize>,
}

impl InducedPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True iff consecutive vertices are adjacent and no other pair is.
    pub fn is_chord_free_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        (0..vs.len()).all(|i| {
            (i + 1..vs.len()).all(|j| g.has_edge(vs[i], vs[j]) == (j == i + 1))
        })
    }
}

impl fmt::Display for InducedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parity of the set of all induced A-B-paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    Even,
    Odd,
    /// No induced A-B-path exists.
    Infinite,
    /// Paths of both parities exist.
    Mixed,
}

impl ParityClass {
    /// The class obtained by extending every path by one edge.
    pub fn flipped(self) -> ParityClass {
        match self {
            ParityClass::Even => ParityClass::Odd,
            ParityClass::Odd => ParityClass::Even,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParityClass::Even => "even",
            ParityClass::Odd => "odd",
            ParityClass::Infinite => "infinite",
            ParityClass::Mixed => "mixed",
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ParityClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Lexicographically ordered stream of induced A-B-paths.
pub struct InducedPaths {
    inner: Search,
}

enum Search {
    Narrow(Backtrack<u128>),
    Wide(Backtrack<VertexSet>),
}

impl Iterator for InducedPaths {
    type Item = InducedPath;

    fn next(&mut self) -> Option<InducedPath> {
        let vertices = match &mut self.inner {
            Search::Narrow(s) => s.next_path(),
            Search::Wide(s) => s.next_path(),
        }?;
        Some(InducedPath { vertices })
    }
}

struct Frame<M> {
    /// Vertices that may not follow this frame's vertex: `A`, the path so
    /// far, and the neighbors of every earlier path vertex.
    forbidden: M,
    candidates: M,
}

struct Backtrack<M> {
    adj: Vec<M>,
    a: M,
    b: M,
    starts: M,
    path: Vec<usize>,
    stack: Vec<Frame<M>>,
}

impl<M: Mask> Backtrack<M> {
    fn new(g: &Graph, a: &VertexSet, b: &VertexSet) -> Self {
        let a = M::from_set(a);
        Backtrack {
            adj: g.masks(),
            starts: a.clone(),
            a,
            b: M::from_set(b),
            path: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn next_path(&mut self) -> Option<Vec<usize>> {
        loop {
            let Some(top) = self.stack.last_mut() else {
                let start = self.starts.pop_lowest()?;
                if self.b.contains(start) {
                    return Some(vec![start]);
                }
                let forbidden = self.a.clone();
                let candidates = self.adj[start].and_not(&forbidden);
                self.path.push(start);
                self.stack.push(Frame {
                    forbidden,
                    candidates,
                });
                continue;
            };
            let Some(next) = top.candidates.pop_lowest() else {
                self.stack.pop();
                self.path.pop();
                continue;
            };
            if self.b.contains(next) {
                let mut found = self.path.clone();
                found.push(next);
                return Some(found);
            }
            let last = *self.path.last().unwrap();
            let forbidden = top
                .forbidden
                .or(&self.adj[last])
                .or(&M::single(last))
                .or(&M::single(next));
            let candidates = self.adj[next].and_not(&forbidden);
            self.path.push(next);
            self.stack.push(Frame {
                forbidden,
                candidates,
            });
        }
    }
}

fn require_nonempty(a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("induced A-B-paths need non-empty A and B"));
    }
    Ok(())
}

/// All induced A-B-paths in lexicographic order of their vertex sequences.
pub fn enumerate_induced_ab_paths(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<InducedPaths> {
    g.check_set(a)?;
    g.check_set(b)?;
    require_nonempty(a, b)?;
    Ok(induced_paths_unchecked(g, a, b))
}

fn induced_paths_unchecked(g: &Graph, a: &VertexSet, b: &VertexSet) -> InducedPaths {
    let inner = if g.is_narrow() {
        Search::Narrow(Backtrack::new(g, a, b))
    } else {
        Search::Wide(Backtrack::new(g, a, b))
    };
    InducedPaths { inner }
}

/// Parity class of the induced A-B-paths; stops as soon as both parities are seen.
pub fn classify_parity(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<ParityClass> {
    g.check_set(a)?;
    g.check_set(b)?;
    require_nonempty(a, b)?;
    Ok(classify_unchecked(g, a, b))
}

/// Like [`classify_parity`], but an empty side simply has no paths.
pub(crate) fn classify_unchecked(g: &Graph, a: &VertexSet, b: &VertexSet) -> ParityClass {
    let (mut even, mut odd) = (false, false);
    for p in induced_paths_unchecked(g, a, b) {
        if p.len() % 2 == 0 {
            even = true;
        } else {
            odd = true;
        }
        if even && odd {
            return ParityClass::Mixed;
        }
    }
    match (even, odd) {
        (true, _) => ParityClass::Even,
        (_, true) => ParityClass::Odd,
        _ => ParityClass::Infinite,
    }
}

/// Whether all induced paths between any two vertices share one parity,
/// using the default cap of [`PARITY_GRAPH_CAP`] vertices.
pub fn is_parity_graph(g: &Graph) -> Result<bool> {
    is_parity_graph_capped(g, PARITY_GRAPH_CAP)
}

pub fn is_parity_graph_capped(g: &Graph, cap: usize) -> Result<bool> {
    Error::check_cap("vertex count for parity-graph recognition", g.n(), cap)?;
    Ok(first_mixed_pair(g).is_none())
}

/// The first pair `u < v` whose induced paths have both parities.
pub fn first_mixed_pair(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let class = classify_unchecked(g, &VertexSet::singleton(u), &VertexSet::singleton(v));
            if class == ParityClass::Mixed {
                return Some((u, v));
            }
        }
    }
    None
}

/// Two-colouring by breadth-first search, one component at a time.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for root in 0..g.n() {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let cx = colour[x].unwrap();
            for y in g.neighbors(x) {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// One term of the parity flip check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipEntry {
    /// Independent subset of `A`, original labels.
    pub w: VertexSet,
    /// `N(W) \ A`, original labels.
    pub neighborhood: VertexSet,
    pub class: ParityClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipReport {
    pub class: ParityClass,
    pub entries: Vec<FlipEntry>,
    /// Subsets `W` whose class is neither the flipped class nor infinite.
    pub violations: Vec<VertexSet>,
    /// Start vertices of induced A-B-paths; each `W = {a}` must give the
    /// flipped class.
    pub witnesses: Vec<usize>,
    /// Witnesses `a` for which `W = {a}` did not give the flipped class.
    pub witness_failures: Vec<usize>,
}

impl FlipReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.witness_failures.is_empty() && !self.witnesses.is_empty()
    }
}

/// For disjoint `A`, `B` with an even or odd class, classifies
/// `(G - A, N(W), B)` for every independent `W ⊆ A`. Each result must be the
/// opposite parity or infinite, and `W = {a}` must give the opposite parity
/// for every start vertex `a` of an induced A-B-path.
pub fn parity_flip_check(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<FlipReport> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::invalid(format!("sets {a} and {b} are not disjoint")));
    }
    let class = classify_parity(g, a, b)?;
    if !matches!(class, ParityClass::Even | ParityClass::Odd) {
        return Err(Error::invalid(format!(
            "parity flip check needs an even or odd class, got {class}"
        )));
    }
    let (reduced, relabel) = g.delete_vertices(a)?;
    let b_mapped = relabel.map_set(b);
    let expected = class.flipped();

    let mut entries = Vec::new();
    let mut violations = Vec::new();
    for w in enumerate_independent_subsets(g, a)? {
        let neighborhood = g.neighborhood(&w)?.difference(a);
        let c = classify_unchecked(&reduced, &relabel.map_set(&neighborhood), &b_mapped);
        if c != expected && c != ParityClass::Infinite {
            violations.push(w.clone());
        }
        entries.push(FlipEntry {
            w,
            neighborhood,
            class: c,
        });
    }

    let mut witnesses: Vec<usize> = enumerate_induced_ab_paths(g, a, b)?
        .map(|p| p.vertices[0])
        .collect();
    witnesses.dedup();
    let witness_failures = witnesses
        .iter()
        .copied()
        .filter(|&x| {
            entries
                .iter()
                .find(|e| e.w == VertexSet::singleton(x))
                .is_none_or(|e| e.class != expected)
        })
        .collect();

    Ok(FlipReport {
        class,
        entries,
        violations,
        witnesses,
        witness_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_tree, Family};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from(vs)
    }

    fn paths(g: &Graph, a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
        enumerate_induced_ab_paths(g, &set(a), &set(b))
            .unwrap()
            .map(|p| p.vertices)
            .collect()
    }

    #[test]
    fn path_examples() {
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(paths(&p3, &[0], &[2]), vec![vec![0, 1, 2]]);

        // C5 relabeled 0..4: the walk around the cycle has a chord.
        let c5 = Family::Cycle(5).generate().unwrap();
        assert_eq!(paths(&c5, &[0], &[1]), vec![vec![0, 1]]);
        assert_eq!(paths(&c5, &[0], &[2]), vec![vec![0, 1, 2], vec![0, 4, 3, 2]]);
    }

    #[test]
    fn length_zero_paths() {
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(paths(&p3, &[1], &[1]), vec![vec![1]]);
        // (0,1) would meet A twice.
        assert_eq!(paths(&p3, &[0, 1], &[1, 2]), vec![vec![1]]);
        assert_eq!(
            classify_parity(&Graph::empty(1), &set(&[0]), &set(&[0])).unwrap(),
            ParityClass::Even
        );
    }

    #[test]
    fn paths_avoid_extra_a_and_b_vertices() {
        let p4 = Family::Path(4).generate().unwrap();
        assert_eq!(paths(&p4, &[0, 1], &[3]), vec![vec![1, 2, 3]]);
        assert_eq!(paths(&p4, &[0], &[2, 3]), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn classify_examples() {
        let k2 = Family::Complete(2).generate().unwrap();
        let two = k2.disjoint_union(&k2);
        assert_eq!(classify_parity(&two, &set(&[0]), &set(&[2])).unwrap(), ParityClass::Infinite);
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(classify_parity(&p3, &set(&[0]), &set(&[2])).unwrap(), ParityClass::Even);
        let c5 = Family::Cycle(5).generate().unwrap();
        assert_eq!(classify_parity(&c5, &set(&[0]), &set(&[2])).unwrap(), ParityClass::Mixed);
        assert!(classify_parity(&c5, &set(&[]), &set(&[2])).is_err());
        assert!(enumerate_induced_ab_paths(&c5, &set(&[1]), &set(&[])).is_err());
    }

    #[test]
    fn recognition_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=10 {
            assert!(is_parity_graph(&random_tree(n, &mut rng)).unwrap());
        }
        let c5 = Family::Cycle(5).generate().unwrap();
        assert!(!is_parity_graph(&c5).unwrap());
        assert_eq!(first_mixed_pair(&c5), Some((0, 2)));
        let c6 = Family::Cycle(6).generate().unwrap();
        assert!(is_parity_graph(&c6).unwrap());
        assert!(matches!(
            is_parity_graph(&Graph::empty(13)),
            Err(Error::ResourceLimit { cap: 12, .. })
        ));
        // Every induced path in a clique is a single edge.
        assert!(is_parity_graph(&Family::Complete(4).generate().unwrap()).unwrap());
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&Family::Cycle(6).generate().unwrap()));
        assert!(!is_bipartite(&Family::Complete(3).generate().unwrap()));
        assert!(is_bipartite(&Graph::empty(4)));
        assert!(is_bipartite(&Family::Grid(3, 4).generate().unwrap()));
    }

    #[test]
    fn flip_examples() {
        let p3 = Family::Path(3).generate().unwrap();
        let r = parity_flip_check(&p3, &set(&[0]), &set(&[2])).unwrap();
        assert_eq!(r.class, ParityClass::Even);
        let w0 = r.entries.iter().find(|e| e.w == set(&[0])).unwrap();
        assert_eq!(w0.neighborhood, set(&[1]));
        assert_eq!(w0.class, ParityClass::Odd);
        assert!(r.holds());

        let p4 = Family::Path(4).generate().unwrap();
        let r = parity_flip_check(&p4, &set(&[0]), &set(&[3])).unwrap();
        assert_eq!(r.class, ParityClass::Odd);
        assert_eq!(r.entries[1].class, ParityClass::Even);
        assert_eq!(r.entries[0].class, ParityClass::Infinite);
        assert!(r.holds());

        let c5 = Family::Cycle(5).generate().unwrap();
        assert!(parity_flip_check(&c5, &set(&[0]), &set(&[2])).is_err());
        assert!(parity_flip_check(&p3, &set(&[0]), &set(&[0])).is_err());
    }
}
