//! Counting independent sets.
//!
//! [`sigma`] splits the graph into connected components, multiplies their
//! counts, and on each component branches on a pivot `v`:
//! `σ(G) = σ(G - v) + σ(G - v - N(v))`. The pivot is a maximum-degree vertex
//! of the component (lowest label on ties). Intermediate results are memoized
//! on the mask of surviving vertices of the root graph.
//!
//! Graphs with fewer than 128 vertices run on `u128` masks and `u128`
//! counts (`σ <= 2^n` cannot overflow there); larger graphs fall back to
//! [`VertexSet`] masks with [`BigUint`] counts.

use std::collections::HashMap;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{Mask, VertexSet};

/// Largest graph accepted by [`sigma_naive`].
pub const NAIVE_SIGMA_CAP: usize = 25;
/// Largest subset accepted by the subset expansion and enumeration.
pub const SUBSET_CAP: usize = 20;
/// Entries kept in a memo table before it is cleared.
pub const MEMO_CAPACITY: usize = 1 << 21;

/// Brute force over all `2^n` vertex subsets.
pub fn sigma_naive(g: &Graph) -> Result<BigUint> {
    Error::check_cap("vertex count for brute-force counting", g.n(), NAIVE_SIGMA_CAP)?;
    let adj: Vec<u64> = g.masks::<u128>().into_iter().map(|m| m as u64).collect();
    let mut count: u64 = 0;
    for subset in 0u64..1 << g.n() {
        let mut rest = subset;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & subset != 0 {
                independent = false;
                break;
            }
        }
        count += independent as u64;
    }
    Ok(BigUint::from(count))
}

/// Number of independent sets of `g`, including the empty set.
pub fn sigma(g: &Graph) -> BigUint {
    SigmaEngine::new(g).sigma_without(&VertexSet::new())
}

/// Reusable counter for induced subgraphs of one root graph.
///
/// All queries share a memo table, so evaluating several vertex-deleted
/// subgraphs of the same graph reuses overlapping work.
pub struct SigmaEngine {
    n: usize,
    backend: Backend,
}

enum Backend {
    Narrow(Counter<u128, u128>),
    Wide(Counter<VertexSet, BigUint>),
}

impl SigmaEngine {
    pub fn new(g: &Graph) -> Self {
        let backend = if g.n() < 128 {
            Backend::Narrow(Counter::new(g.masks()))
        } else {
            Backend::Wide(Counter::new(g.masks()))
        };
        SigmaEngine { n: g.n(), backend }
    }

    /// `σ(G[alive])`. Members of `alive` outside the graph are ignored.
    pub fn sigma_of(&mut self, alive: &VertexSet) -> BigUint {
        let alive = alive.intersection(&VertexSet::full(self.n));
        match &mut self.backend {
            Backend::Narrow(c) => BigUint::from(c.count(&alive.to_u128())),
            Backend::Wide(c) => c.count(&alive),
        }
    }

    /// `σ(G - removed)`.
    pub fn sigma_without(&mut self, removed: &VertexSet) -> BigUint {
        self.sigma_of(&VertexSet::full(self.n).difference(removed))
    }
}

trait CountValue: Clone + One + Add<Output = Self> + Mul<Output = Self> {
    fn pow2(k: u32) -> Self;
}

impl CountValue for u128 {
    fn pow2(k: u32) -> Self {
        1 << k
    }
}

impl CountValue for BigUint {
    fn pow2(k: u32) -> Self {
        BigUint::one() << k
    }
}

struct Counter<M, N> {
    adj: Vec<M>,
    memo: HashMap<M, N>,
}

impl<M: Mask, N: CountValue> Counter<M, N> {
    fn new(adj: Vec<M>) -> Self {
        Counter {
            adj,
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, alive: &M) -> N {
        if alive.is_empty() {
            return N::one();
        }
        if let Some(c) = self.memo.get(alive) {
            return c.clone();
        }

        let mut isolated = 0u32;
        let mut rest = alive.clone();
        let mut product = N::one();
        while let Some(start) = rest.lowest() {
            let comp = self.component(start, &rest);
            rest = rest.and_not(&comp);
            if comp.count() == 1 {
                isolated += 1;
            } else {
                product = product * self.count_connected(&comp);
            }
        }
        let total = product * N::pow2(isolated);
        self.remember(alive.clone(), total.clone());
        total
    }

    fn count_connected(&mut self, comp: &M) -> N {
        if let Some(c) = self.memo.get(comp) {
            return c.clone();
        }
        let mut pivot = 0;
        let mut best = 0;
        let mut scan = comp.clone();
        while let Some(v) = scan.pop_lowest() {
            let d = self.adj[v].and(comp).count();
            if d > best {
                best = d;
                pivot = v;
            }
        }
        let without = comp.and_not(&M::single(pivot));
        let closed = without.and_not(&self.adj[pivot]);
        let total = self.count(&without) + self.count(&closed);
        self.remember(comp.clone(), total.clone());
        total
    }

    fn component(&self, start: usize, within: &M) -> M {
        let mut comp = M::single(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut reach = M::empty();
            while let Some(v) = frontier.pop_lowest() {
                reach = reach.or(&self.adj[v]);
            }
            frontier = reach.and(within).and_not(&comp);
            comp = comp.or(&frontier);
        }
        comp
    }

    fn remember(&mut self, key: M, value: N) {
        if self.memo.len() >= MEMO_CAPACITY {
            self.memo.clear();
        }
        self.memo.insert(key, value);
    }
}

/// Independent subsets of `within`, in increasing order of their bit masks
/// over the members of `within`.
pub fn enumerate_independent_subsets<'g>(
    g: &'g Graph,
    within: &VertexSet,
) -> Result<impl Iterator<Item = VertexSet> + 'g> {
    g.check_set(within)?;
    Error::check_cap("subset size for independent-set enumeration", within.len(), SUBSET_CAP)?;
    let members: Vec<usize> = within.iter().collect();
    let k = members.len();
    Ok((0u32..1 << k).filter_map(move |bits| {
        let w: VertexSet = (0..k)
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        g.is_independent(&w).then_some(w)
    }))
}

/// `Σ σ(G - U - N(W))` over independent `W ⊆ U`; always equals `σ(G)`.
pub fn sigma_subset_expansion(g: &Graph, subset: &VertexSet) -> Result<BigUint> {
    let mut engine = SigmaEngine::new(g);
    let mut total = BigUint::default();
    for w in enumerate_independent_subsets(g, subset)? {
        let removed = subset.union(&g.neighborhood(&w)?);
        total += engine.sigma_without(&removed);
    }
    Ok(total)
}
