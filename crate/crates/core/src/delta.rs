//! The Merrifield–Simmons difference
//! `Δ(G, A, B) = σ(G - A)·σ(G - B) - σ(G)·σ(G - A - B)`
//! and executable forms of its recurrences.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sigma::{enumerate_independent_subsets, SigmaEngine};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

/// An exact Δ value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeltaValue(BigInt);

impl DeltaValue {
    pub fn new(value: BigInt) -> Self {
        DeltaValue(value)
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn sign(&self) -> Sign {
        match self.0.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }
}

impl From<i64> for DeltaValue {
    fn from(v: i64) -> Self {
        DeltaValue(BigInt::from(v))
    }
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for DeltaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// `Δ(G, {u}, {v})`; `u == v` is evaluated as the set case `A = B = {u}`.
pub fn delta_vertices(g: &Graph, u: usize, v: usize) -> Result<DeltaValue> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    delta_sets(g, &VertexSet::singleton(u), &VertexSet::singleton(v))
}

/// `Δ(G, A, B)`; empty, overlapping and equal sets are all allowed.
pub fn delta_sets(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<DeltaValue> {
    g.check_set(a)?;
    g.check_set(b)?;
    Ok(delta_with(&mut SigmaEngine::new(g), a, b))
}

/// Δ evaluated on an existing engine, so repeated calls share memoization.
pub fn delta_with(engine: &mut SigmaEngine, a: &VertexSet, b: &VertexSet) -> DeltaValue {
    let without_a = BigInt::from(engine.sigma_without(a));
    let without_b = BigInt::from(engine.sigma_without(b));
    let whole = BigInt::from(engine.sigma_without(&VertexSet::new()));
    let without_ab = BigInt::from(engine.sigma_without(&a.union(b)));
    DeltaValue(without_a * without_b - whole * without_ab)
}

/// `-Σ Δ(G - A, N(W), B)` over independent `W ⊆ A`, for disjoint `A`, `B`.
///
/// Both sets are mapped into the labels of `G - A`; members of `N(W)` that lie
/// in `A` are deleted along with `A`. The result always equals
/// [`delta_sets`]`(g, a, b)`.
pub fn delta_neighborhood_expansion(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<DeltaValue> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::invalid(format!("sets {a} and {b} are not disjoint")));
    }
    let (reduced, relabel) = g.delete_vertices(a)?;
    let b_mapped = relabel.map_set(b);
    let mut engine = SigmaEngine::new(&reduced);
    let mut total = BigInt::default();
    for w in enumerate_independent_subsets(g, a)? {
        let n_mapped = relabel.map_set(&g.neighborhood(&w)?);
        total += delta_with(&mut engine, &n_mapped, &b_mapped).0;
    }
    Ok(DeltaValue(-total))
}

/// `(Δ(G, A, B), Δ(G - C, A \ C, B \ C))` with `C = A ∩ B ≠ ∅`; the first
/// component is always strictly smaller.
pub fn delta_nondisjoint_bound(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<(DeltaValue, DeltaValue)> {
    g.check_set(a)?;
    g.check_set(b)?;
    let common = a.intersection(b);
    if common.is_empty() {
        return Err(Error::invalid(format!("sets {a} and {b} are disjoint")));
    }
    let whole = delta_sets(g, a, b)?;
    let (reduced, relabel) = g.delete_vertices(&common)?;
    let rest = delta_sets(
        &reduced,
        &relabel.map_set(&a.difference(&common)),
        &relabel.map_set(&b.difference(&common)),
    )?;
    debug_assert_eq!(whole.cmp(&rest), Ordering::Less);
    Ok((whole, rest))
}
