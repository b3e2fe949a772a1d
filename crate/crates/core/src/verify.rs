//! Verification harness for the sign conjecture and the set-level identities.
//!
//! Pair verdicts check `sgn Δ(G, u, v) = (-1)^(d(u, v) + 1)`. Pairs in
//! different components are expected to have `Δ = 0`. Set verdicts check the
//! sign trichotomy: even class gives `Δ < 0`, odd class `Δ > 0`, infinite
//! class `Δ = 0`; mixed classes are recorded without a verdict.
//!
//! Everything random is driven by seeded ChaCha streams, and parallel work is
//! reassembled in input order, so identical inputs give identical output.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::delta::{
    delta_neighborhood_expansion, delta_nondisjoint_bound, delta_sets, delta_with, DeltaValue,
    Sign,
};
use crate::error::{Error, Result};
use crate::generators::{enumerate_labeled_graphs, erdos_renyi};
use crate::graph::{Distance, Graph};
use crate::io::graph6;
use crate::paths::{
    classify_parity, is_bipartite, is_parity_graph_capped, parity_flip_check, ParityClass,
    PARITY_GRAPH_CAP,
};
use crate::sigma::{sigma, sigma_subset_expansion, SigmaEngine, SUBSET_CAP};
use crate::vertex_set::VertexSet;

/// Largest graph accepted by exhaustive subset-pair verification.
pub const EXHAUSTIVE_SETS_CAP: usize = 8;
/// Edge probabilities used for random graphs.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

const BATCH: usize = 2048;

pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Sign predicted for two vertices at the given distance.
pub fn expected_sign(distance: Distance) -> Sign {
    match distance {
        Distance::Infinite => Sign::Zero,
        Distance::Finite(d) if d % 2 == 1 => Sign::Positive,
        Distance::Finite(_) => Sign::Negative,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub graph: String,
    pub u: usize,
    pub v: usize,
    pub distance: Distance,
    pub delta: DeltaValue,
    pub sign: Sign,
    pub predicted: Sign,
    pub conforms: bool,
}

/// One verdict per unordered pair `u < v`, in lexicographic order.
pub fn verify_msc_pairs(g: &Graph, graph_id: &str) -> Vec<PairVerdict> {
    let mut engine = SigmaEngine::new(g);
    let whole = BigInt::from(engine.sigma_without(&VertexSet::new()));
    let single: Vec<BigInt> = (0..g.n())
        .map(|u| BigInt::from(engine.sigma_without(&VertexSet::singleton(u))))
        .collect();
    let mut out = Vec::with_capacity(g.n() * g.n().saturating_sub(1) / 2);
    for u in 0..g.n() {
        let dist = g.bfs_distances(u);
        for v in u + 1..g.n() {
            let both = BigInt::from(engine.sigma_without(&VertexSet::from([u, v])));
            let delta = DeltaValue::new(&single[u] * &single[v] - &whole * both);
            let distance = dist[v].map_or(Distance::Infinite, Distance::Finite);
            let predicted = expected_sign(distance);
            out.push(PairVerdict {
                graph: graph_id.to_string(),
                u,
                v,
                distance,
                sign: delta.sign(),
                conforms: delta.sign() == predicted,
                delta,
                predicted,
            });
        }
    }
    out
}

/// How subset pairs are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetMode {
    /// Every unordered pair of non-empty subsets `A`, `B` (`A` first in
    /// bit-mask order), including `A = B`.
    Exhaustive,
    /// `count` ordered pairs of uniformly random non-empty subsets.
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetVerdict {
    pub graph: String,
    pub a: VertexSet,
    pub b: VertexSet,
    pub parity: ParityClass,
    pub delta: DeltaValue,
    pub sign: Sign,
    /// `None` for mixed classes, which carry no prediction.
    pub conforms: Option<bool>,
}

pub fn expected_set_sign(parity: ParityClass) -> Option<Sign> {
    match parity {
        ParityClass::Even => Some(Sign::Negative),
        ParityClass::Odd => Some(Sign::Positive),
        ParityClass::Infinite => Some(Sign::Zero),
        ParityClass::Mixed => None,
    }
}

fn set_verdict(
    g: &Graph,
    engine: &mut SigmaEngine,
    graph_id: &str,
    a: VertexSet,
    b: VertexSet,
) -> SetVerdict {
    let parity = classify_parity(g, &a, &b).expect("non-empty sets in range");
    let delta = delta_with(engine, &a, &b);
    SetVerdict {
        graph: graph_id.to_string(),
        conforms: expected_set_sign(parity).map(|s| s == delta.sign()),
        sign: delta.sign(),
        a,
        b,
        parity,
        delta,
    }
}

fn random_nonempty_subset<R: Rng>(n: usize, rng: &mut R) -> VertexSet {
    loop {
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

fn subset_of_mask(mask: u32) -> VertexSet {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Sign trichotomy verdicts for subset pairs of `g`.
pub fn verify_gmsc_sets(g: &Graph, graph_id: &str, mode: SetMode) -> Result<Vec<SetVerdict>> {
    verify_gmsc_sets_capped(g, graph_id, mode, EXHAUSTIVE_SETS_CAP)
}

pub fn verify_gmsc_sets_capped(
    g: &Graph,
    graph_id: &str,
    mode: SetMode,
    exhaustive_cap: usize,
) -> Result<Vec<SetVerdict>> {
    let mut engine = SigmaEngine::new(g);
    match mode {
        SetMode::Exhaustive => {
            Error::check_cap(
                "vertex count for exhaustive subset pairs",
                g.n(),
                exhaustive_cap.min(16),
            )?;
            let top = 1u32 << g.n();
            let mut out = Vec::new();
            for a in 1..top {
                for b in a..top {
                    out.push(set_verdict(g, &mut engine, graph_id, subset_of_mask(a), subset_of_mask(b)));
                }
            }
            Ok(out)
        }
        SetMode::Sample { count, seed } => {
            if g.n() == 0 {
                return Err(Error::invalid("cannot sample non-empty subsets of the empty graph"));
            }
            let mut rng = rng_for(seed, 0);
            Ok((0..count)
                .map(|_| {
                    let a = random_nonempty_subset(g.n(), &mut rng);
                    let b = random_nonempty_subset(g.n(), &mut rng);
                    set_verdict(g, &mut engine, graph_id, a, b)
                })
                .collect())
        }
    }
}

/// The identities exercised by [`verify_identities`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `σ(G1 ⊎ G2) = σ(G1)·σ(G2)`.
    Multiplicativity,
    /// `σ(G) = σ(G - v) + σ(G - v - N(v))`.
    VertexRecurrence,
    /// Sum over independent subsets of a vertex set.
    SubsetExpansion,
    /// `Δ(G, A, B) = -Σ Δ(G - A, N(W), B)` for disjoint sets.
    NeighborhoodExpansion,
    /// `Δ = 0` when no component meets both sets.
    Separation,
    /// `Δ(G, A, B) < Δ(G - C, A \ C, B \ C)` for `C = A ∩ B ≠ ∅`.
    Overlap,
    /// Deleting `A` flips the parity class of `(N(W), B)`.
    ParityFlip,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Multiplicativity,
        Identity::VertexRecurrence,
        Identity::SubsetExpansion,
        Identity::NeighborhoodExpansion,
        Identity::Separation,
        Identity::Overlap,
        Identity::ParityFlip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Multiplicativity => "multiplicativity",
            Identity::VertexRecurrence => "vertex-recurrence",
            Identity::SubsetExpansion => "subset-expansion",
            Identity::NeighborhoodExpansion => "neighborhood-expansion",
            Identity::Separation => "separation",
            Identity::Overlap => "overlap",
            Identity::ParityFlip => "parity-flip",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed identity check, reproducible from `(seed, trial)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub identity: Identity,
    pub seed: u64,
    pub trial: u64,
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub tallies: BTreeMap<Identity, Tally>,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn checked(&self, id: Identity) -> usize {
        self.tallies.get(&id).map_or(0, |t| t.checked)
    }

    pub fn failed(&self, id: Identity) -> usize {
        self.tallies.get(&id).map_or(0, |t| t.checked - t.passed)
    }

    pub fn total_failures(&self) -> usize {
        self.failures.len()
    }

    pub fn merge(&mut self, other: IdentityReport) {
        for (id, t) in other.tallies {
            let e = self.tallies.entry(id).or_default();
            e.checked += t.checked;
            e.passed += t.passed;
        }
        self.failures.extend(other.failures);
    }
}

struct TrialContext<'a> {
    g: &'a Graph,
    seed: u64,
    trial: u64,
    report: IdentityReport,
}

impl TrialContext<'_> {
    fn record(&mut self, id: Identity, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.report.tallies.entry(id).or_default();
        t.checked += 1;
        if ok {
            t.passed += 1;
        } else {
            self.report.failures.push(IdentityFailure {
                identity: id,
                seed: self.seed,
                trial: self.trial,
                graph6: graph6::emit(self.g),
                detail: detail(),
            });
        }
    }
}

fn random_subset<R: Rng>(n: usize, p: f64, rng: &mut R) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

fn check_instance<R: Rng>(ctx: &mut TrialContext<'_>, rng: &mut R) {
    let g = ctx.g;
    let n = g.n();
    let sigma_g = sigma(g);

    let h = erdos_renyi(rng.gen_range(0..=5), 0.5, rng);
    let joined = sigma(&g.disjoint_union(&h));
    let product = &sigma_g * sigma(&h);
    ctx.record(Identity::Multiplicativity, joined == product, || {
        format!("σ(G ⊎ H) = {joined}, σ(G)·σ(H) = {product}, H = {}", graph6::emit(&h))
    });

    if n > 0 {
        let v = rng.gen_range(0..n);
        let (without_v, _) = g.delete_vertices(&VertexSet::singleton(v)).unwrap();
        let closed = g.neighbors(v).union(&VertexSet::singleton(v));
        let (without_closed, _) = g.delete_vertices(&closed).unwrap();
        let rhs = sigma(&without_v) + sigma(&without_closed);
        ctx.record(Identity::VertexRecurrence, rhs == sigma_g, || {
            format!("pivot {v}: σ(G) = {sigma_g}, recurrence gives {rhs}")
        });
    }

    let u: VertexSet = random_subset(n, 0.5, rng).iter().take(SUBSET_CAP).collect();
    let expanded = sigma_subset_expansion(g, &u).unwrap();
    ctx.record(Identity::SubsetExpansion, expanded == sigma_g, || {
        format!("U = {u}: expansion {expanded}, σ(G) = {sigma_g}")
    });

    let a: VertexSet = random_subset(n, 0.3, rng).iter().take(SUBSET_CAP).collect();
    let b = random_subset(n, 0.3, rng).difference(&a);
    let direct = delta_sets(g, &a, &b).unwrap();
    let expanded = delta_neighborhood_expansion(g, &a, &b).unwrap();
    ctx.record(Identity::NeighborhoodExpansion, direct == expanded, || {
        format!("A = {a}, B = {b}: Δ = {direct}, expansion {expanded}")
    });

    if g.split_by_sets(&a, &b).unwrap().part_ab.is_empty() {
        ctx.record(Identity::Separation, direct.sign() == Sign::Zero, || {
            format!("A = {a}, B = {b} separated but Δ = {direct}")
        });
    }
    let other = erdos_renyi(rng.gen_range(1..=5), 0.5, rng);
    let sep = g.disjoint_union(&other);
    let sep_a = random_subset(n, 0.5, rng);
    let sep_b: VertexSet = random_subset(other.n(), 0.5, rng).iter().map(|x| x + n).collect();
    let split = sep.split_by_sets(&sep_a, &sep_b).unwrap();
    let sep_delta = delta_sets(&sep, &sep_a, &sep_b).unwrap();
    ctx.record(
        Identity::Separation,
        split.part_ab.is_empty() && sep_delta.sign() == Sign::Zero,
        || format!("G ⊎ {}: A = {sep_a}, B = {sep_b}, Δ = {sep_delta}", graph6::emit(&other)),
    );

    if n > 0 {
        let c = rng.gen_range(0..n);
        let mut oa = random_subset(n, 0.3, rng);
        let mut ob = random_subset(n, 0.3, rng);
        oa.insert(c);
        ob.insert(c);
        let (whole, rest) = delta_nondisjoint_bound(g, &oa, &ob).unwrap();
        ctx.record(Identity::Overlap, whole < rest, || {
            format!("A = {oa}, B = {ob}: Δ = {whole}, reduced Δ = {rest}")
        });
    }

    if !a.is_empty() && !b.is_empty() {
        let class = classify_parity(g, &a, &b).unwrap();
        if matches!(class, ParityClass::Even | ParityClass::Odd) {
            let report = parity_flip_check(g, &a, &b).unwrap();
            ctx.record(Identity::ParityFlip, report.holds(), || {
                format!(
                    "A = {a}, B = {b} ({class}): violations {:?}, witness failures {:?}",
                    report.violations, report.witness_failures
                )
            });
        }
    }
}

/// Runs every identity on `trials` random subset pairs of `g`. Trial `t`
/// draws from stream `t` of the ChaCha generator seeded with `seed`.
pub fn verify_identities(g: &Graph, trials: u64, seed: u64) -> IdentityReport {
    let parts: Vec<IdentityReport> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut ctx = TrialContext {
                g,
                seed,
                trial,
                report: IdentityReport::default(),
            };
            check_instance(&mut ctx, &mut rng_for(seed, trial));
            ctx.report
        })
        .collect();
    let mut report = IdentityReport::default();
    for p in parts {
        report.merge(p);
    }
    report
}

/// A seeded Erdős–Rényi graph with `1..=max_n` vertices and an edge
/// probability drawn from [`EDGE_PROBABILITIES`].
pub fn random_graph<R: Rng>(max_n: usize, rng: &mut R) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    erdos_renyi(n, p, rng)
}

/// Identity checks on `instances` random graphs with at most `max_n`
/// vertices; instance `i` uses stream `i` of `seed`.
pub fn identity_sweep(instances: u64, max_n: usize, seed: u64) -> IdentityReport {
    let parts: Vec<IdentityReport> = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let g = random_graph(max_n, &mut rng);
            let mut ctx = TrialContext {
                g: &g,
                seed,
                trial: i,
                report: IdentityReport::default(),
            };
            check_instance(&mut ctx, &mut rng);
            ctx.report
        })
        .collect();
    let mut report = IdentityReport::default();
    for p in parts {
        report.merge(p);
    }
    report
}

fn serialize_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `(σ(G), σ(G - u), σ(G - v), σ(G - u - v))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaTuple {
    #[serde(serialize_with = "serialize_decimal")]
    pub whole: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub without_u: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub without_v: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub without_uv: BigUint,
}

impl SigmaTuple {
    pub fn delta(&self) -> DeltaValue {
        let p = BigInt::from(&self.without_u * &self.without_v);
        let q = BigInt::from(&self.whole * &self.without_uv);
        DeltaValue::new(p - q)
    }

    pub fn as_u64s(&self) -> Option<[u64; 4]> {
        let f = |x: &BigUint| u64::try_from(x).ok();
        Some([
            f(&self.whole)?,
            f(&self.without_u)?,
            f(&self.without_v)?,
            f(&self.without_uv)?,
        ])
    }
}

impl fmt::Display for SigmaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.whole, self.without_u, self.without_v, self.without_uv
        )
    }
}

/// A vertex pair whose Δ sign disagrees with the distance parity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    pub u: usize,
    pub v: usize,
    pub distance: Distance,
    pub sigma: SigmaTuple,
    pub delta: DeltaValue,
    /// `None` when the graph is above the recognition cap.
    pub is_parity: Option<bool>,
    pub is_bipartite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Graphs with more vertices are skipped.
    pub max_n: usize,
    /// Stop reading the stream after this many graphs.
    pub max_graphs: Option<usize>,
    /// Stop scanning once this many records have been collected.
    pub max_records: Option<usize>,
    pub parity_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_n: usize::MAX,
            max_graphs: None,
            max_records: None,
            parity_cap: PARITY_GRAPH_CAP,
        }
    }
}

fn counterexamples_in(g: &Graph, graph_id: &str, parity_cap: usize) -> Vec<CounterexampleRecord> {
    let bad: Vec<PairVerdict> = verify_msc_pairs(g, graph_id)
        .into_iter()
        .filter(|p| !p.conforms)
        .collect();
    if bad.is_empty() {
        return Vec::new();
    }
    let is_parity = is_parity_graph_capped(g, parity_cap).ok();
    let is_bip = is_bipartite(g);
    let g6 = graph6::emit(g);
    let mut engine = SigmaEngine::new(g);
    bad.into_iter()
        .map(|p| {
            let sigma = SigmaTuple {
                whole: engine.sigma_without(&VertexSet::new()),
                without_u: engine.sigma_without(&VertexSet::singleton(p.u)),
                without_v: engine.sigma_without(&VertexSet::singleton(p.v)),
                without_uv: engine.sigma_without(&VertexSet::from([p.u, p.v])),
            };
            CounterexampleRecord {
                graph: graph_id.to_string(),
                n: g.n(),
                m: g.edge_count(),
                graph6: g6.clone(),
                edges: g.edges(),
                u: p.u,
                v: p.v,
                distance: p.distance,
                sigma,
                delta: p.delta,
                is_parity,
                is_bipartite: is_bip,
            }
        })
        .collect()
}

/// Scans a graph stream for pairs violating the sign conjecture. Records
/// are ordered by vertex count, then edge count, then stream order.
pub fn search_counterexamples<I>(source: I, limits: &SearchLimits) -> Vec<CounterexampleRecord>
where
    I: IntoIterator<Item = (String, Graph)>,
{
    let mut stream = source
        .into_iter()
        .take(limits.max_graphs.unwrap_or(usize::MAX))
        .filter(|(_, g)| g.n() <= limits.max_n);
    let mut records = Vec::new();
    loop {
        let batch: Vec<(String, Graph)> = stream.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let found: Vec<Vec<CounterexampleRecord>> = batch
            .par_iter()
            .map(|(id, g)| counterexamples_in(g, id, limits.parity_cap))
            .collect();
        records.extend(found.into_iter().flatten());
        if limits.max_records.is_some_and(|m| records.len() >= m) {
            break;
        }
    }
    records.sort_by_key(|r| (r.n, r.m));
    if let Some(m) = limits.max_records {
        records.truncate(m);
    }
    records
}

/// Labeled graphs on `n` vertices tagged `labeled:n=<n>:mask=<mask>`.
pub fn labeled_stream(n: usize) -> Result<impl Iterator<Item = (String, Graph)>> {
    Ok(enumerate_labeled_graphs(n)?
        .enumerate()
        .map(move |(mask, g)| (format!("labeled:n={n}:mask={mask}"), g)))
}

/// Scans labeled graphs with `n = 0, 1, ..., max_n` and stops at the first
/// vertex count that admits a violation. Returns that count with its records.
pub fn search_minimal_labeled(
    max_n: usize,
    limits: &SearchLimits,
) -> Result<(Option<usize>, Vec<CounterexampleRecord>)> {
    for n in 0..=max_n {
        let records = search_counterexamples(labeled_stream(n)?, limits);
        if !records.is_empty() {
            return Ok((Some(n), records));
        }
    }
    Ok((None, Vec::new()))
}

/// Verdicts for many graphs, computed in parallel and returned in input order.
pub fn verify_msc_many(graphs: &[(String, Graph)]) -> Vec<Vec<PairVerdict>> {
    graphs.par_iter().map(|(id, g)| verify_msc_pairs(g, id)).collect()
}
