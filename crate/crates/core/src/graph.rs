//! Immutable simple graphs on the vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{Mask, VertexSet, NARROW_LIMIT};

/// A simple undirected graph; adjacency is stored as one [`VertexSet`] per
/// vertex. Every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Shortest-path distance between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Order-preserving relabeling produced by vertex deletion.
///
/// The surviving vertices keep their relative order and are renumbered
/// `0..n - |W|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl Relabeling {
    /// New label of an original vertex, `None` if it was deleted.
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Original label of a vertex of the reduced graph.
    pub fn original(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Image of an original vertex set; deleted vertices are dropped.
    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_label(v)).collect()
    }

    pub fn original_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.new_to_old[v]).collect()
    }

    pub fn new_to_old(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// The components of a graph grouped by which of two vertex sets they meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSplit {
    /// Components meeting `A` only.
    pub part_a: VertexSet,
    /// Components meeting `B` only.
    pub part_b: VertexSet,
    /// Components meeting both `A` and `B`.
    pub part_ab: VertexSet,
    /// Components meeting neither.
    pub part_star: VertexSet,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(v))
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// `G - W` together with the relabeling of the surviving vertices.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_set(removed)?;
        let mut old_to_new = vec![None; self.n()];
        let mut new_to_old = Vec::with_capacity(self.n() - removed.len());
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let relabel = Relabeling {
            new_to_old,
            old_to_new,
        };
        let adj = relabel
            .new_to_old
            .iter()
            .map(|&old| relabel.map_set(&self.adj[old]))
            .collect();
        Ok((Graph { adj }, relabel))
    }

    /// The subgraph induced by `keep`, relabeled in order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_set(keep)?;
        self.delete_vertices(&self.vertices().difference(keep))
    }

    /// Open neighborhood `N(W)`; it may intersect `W`.
    pub fn neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        Ok(set
            .iter()
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| s.iter().map(|v| v + shift).collect::<VertexSet>()),
        );
        Graph { adj }
    }

    /// Connected components, ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let comp = self.component_of(start);
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let reach = self.neighborhood(&frontier).expect("in range");
            frontier = reach.difference(&comp);
            comp = comp.union(&frontier);
        }
        comp
    }

    /// Breadth-first shortest-path distance.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v].map_or(Distance::Infinite, Distance::Finite))
    }

    /// Distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Groups the components by whether they meet `a`, `b`, both or neither.
    pub fn split_by_sets(&self, a: &VertexSet, b: &VertexSet) -> Result<ComponentSplit> {
        self.check_set(a)?;
        self.check_set(b)?;
        let mut split = ComponentSplit {
            part_a: VertexSet::new(),
            part_b: VertexSet::new(),
            part_ab: VertexSet::new(),
            part_star: VertexSet::new(),
        };
        for comp in self.connected_components() {
            let part = match (!comp.is_disjoint(a), !comp.is_disjoint(b)) {
                (true, true) => &mut split.part_ab,
                (true, false) => &mut split.part_a,
                (false, true) => &mut split.part_b,
                (false, false) => &mut split.part_star,
            };
            *part = part.union(&comp);
        }
        Ok(split)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Adjacency as generic masks; `u128` requires `n <= 128`.
    pub(crate) fn masks<M: Mask>(&self) -> Vec<M> {
        self.adj.iter().map(M::from_set).collect()
    }

    pub(crate) fn is_narrow(&self) -> bool {
        self.n() <= NARROW_LIMIT
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
