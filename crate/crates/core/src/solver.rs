//! Exact dimension computation by cardinality-ordered subset enumeration.
//!
//! Subsets are visited by size `k = 1, 2, ...` and, within a size, in
//! lexicographic order of their sorted vertex lists. The first resolving
//! subset is returned, so the witness is the lexicographically smallest
//! basis. Multiset resolvability is not monotone under taking supersets,
//! hence no level is ever skipped: the only subsets excluded from testing
//! are those violating a K-end constraint (see [`required_vertices`]), each
//! of which is provably non-resolving.
//!
//! Parallel runs split each level's rank range into chunks. Workers share
//! the smallest successful rank seen so far and abandon ranks above it;
//! the reduction takes the minimum rank, so results do not depend on the
//! number of workers or on scheduling.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::bounds::{self, InfiniteCertificate};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, k_end_structure, Caps, DistMatrix, Graph};
use crate::multiset::{violating_pairs, Kind, Scope, Variant};

/// Largest graph the packed representation supports: five bits per distance
/// and per multiplicity within a `u128`.
pub const PACKED_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    pub use_structural_pruning: bool,
    pub use_infinite_shortcuts: bool,
    pub parallel_shards: usize,
    /// Maximum number of subsets (in enumeration order) that may be visited.
    pub subset_budget: Option<u64>,
    pub caps: Caps,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            use_structural_pruning: true,
            use_infinite_shortcuts: true,
            parallel_shards: 1,
            subset_budget: None,
            caps: Caps::default(),
        }
    }
}

impl SolverOptions {
    /// Plain full scan: no pruning, no shortcuts, one worker.
    pub fn naive() -> Self {
        SolverOptions { use_structural_pruning: false, use_infinite_shortcuts: false, ..Default::default() }
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.parallel_shards = shards.max(1);
        self
    }
}

/// A dimension value. `Finite(k) < Infinite` for every `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DimensionValue {
    Finite(usize),
    Infinite,
}

impl DimensionValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            DimensionValue::Finite(k) => Some(k),
            DimensionValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == DimensionValue::Infinite
    }
}

impl std::fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimensionValue::Finite(k) => write!(f, "{k}"),
            DimensionValue::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for DimensionValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DimensionValue::Finite(k) => s.serialize_u64(*k as u64),
            DimensionValue::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteReason {
    Structural(InfiniteCertificate),
    /// Every non-empty subset was either tested or excluded by a K-end
    /// constraint, and none resolves.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub variant: Variant,
    pub value: DimensionValue,
    pub witness: Option<Vec<usize>>,
    pub certificate: Option<String>,
    pub subsets_checked: u64,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub infinite_reason: Option<InfiniteReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "count")]
pub enum Requirement {
    /// Exactly one of the K-end vertices lies in every resolving set.
    ExactlyOne,
    /// At least this many of the K-end vertices lie in every resolving set.
    AtLeast(usize),
    /// No resolving set exists.
    Unsatisfiable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RequiredVertices {
    pub clique: Vec<usize>,
    pub ends: Vec<usize>,
    pub requirement: Requirement,
    /// Set for the two-end LDIM_MS case, which follows from the closed-twin
    /// argument rather than from a stated theorem.
    pub derived_from_proof: bool,
}

/// K-end membership constraints every resolving set must satisfy.
///
/// For LMD, two K-end vertices of one clique are closed twins: exactly one
/// of them must be a landmark, and three or more make the graph unresolvable.
/// For LDIM_MS, any two K-end vertices left outside the landmark set
/// collide, so all but one of them must be landmarks. Other variants have
/// no constraints.
pub fn required_vertices(g: &Graph, variant: Variant, caps: &Caps) -> Result<Vec<RequiredVertices>> {
    if !matches!(variant, Variant::Lmd | Variant::LdimMs) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for kc in k_end_structure(g, caps)? {
        let e = kc.ends.len();
        if e < 2 {
            continue;
        }
        let (requirement, derived_from_proof) = match (variant, e) {
            (Variant::Lmd, 2) => (Requirement::ExactlyOne, false),
            (Variant::Lmd, _) => (Requirement::Unsatisfiable, false),
            (_, 2) => (Requirement::AtLeast(1), true),
            (_, _) => (Requirement::AtLeast(e - 1), false),
        };
        out.push(RequiredVertices { clique: kc.clique, ends: kc.ends, requirement, derived_from_proof });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Certificate {
    Valid,
    Invalid { violating_pairs: Vec<(usize, usize)> },
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        matches!(self, Certificate::Valid)
    }
}

/// Checks a proposed landmark set, reporting every violating pair.
pub fn certify(g: &Graph, w: &[usize], variant: Variant) -> Result<Certificate> {
    let dm = all_pairs_distances(g)?;
    certify_with(&dm, g, w, variant)
}

pub fn certify_with(dm: &DistMatrix, g: &Graph, w: &[usize], variant: Variant) -> Result<Certificate> {
    let pairs = violating_pairs(dm, g, w, variant)?;
    Ok(if pairs.is_empty() { Certificate::Valid } else { Certificate::Invalid { violating_pairs: pairs } })
}

pub fn dimension(g: &Graph, variant: Variant, opts: &SolverOptions) -> Result<DimensionResult> {
    let dm = all_pairs_distances(g)?;
    dimension_with(g, &dm, variant, opts)
}

pub fn dimension_with(g: &Graph, dm: &DistMatrix, variant: Variant, opts: &SolverOptions) -> Result<DimensionResult> {
    let start = Instant::now();
    let n = g.n();
    let cap = opts.caps.solver.min(PACKED_LIMIT);
    if n > cap {
        return Err(Error::CapExceeded { what: "dimension solver", n, cap });
    }
    let structural_ok = n <= opts.caps.clique;

    if variant.may_be_infinite() && opts.use_infinite_shortcuts && structural_ok {
        let certs = bounds::infinite_certificates_with(g, dm, &opts.caps)?;
        if let Some(cert) = certs.into_iter().find(|c| c.variant() == variant) {
            return Ok(DimensionResult {
                variant,
                value: DimensionValue::Infinite,
                witness: None,
                certificate: Some(cert.describe()),
                subsets_checked: 0,
                elapsed_ms: start.elapsed().as_millis() as u64,
                infinite_reason: Some(InfiniteReason::Structural(cert)),
            });
        }
    }

    let constraints = if opts.use_structural_pruning && structural_ok {
        required_vertices(g, variant, &opts.caps)?.iter().map(MaskConstraint::from).collect()
    } else {
        Vec::new()
    };
    let eval = Evaluator::new(g, dm, variant);
    let binom = Binomials::new(n);
    let shards = opts.parallel_shards.max(1);

    let mut checked = 0u64;
    let mut offset = 0u64;
    for k in 1..=n {
        let total = binom.get(n, k);
        let limit = match opts.subset_budget {
            Some(b) => total.min(b.saturating_sub(offset)),
            None => total,
        };
        let level = Level { n, k, limit, binom: &binom, eval: &eval, constraints: &constraints };
        let outcome = if shards == 1 || limit < 64 { level.run_sequential() } else { level.run_parallel(shards) };
        checked += outcome.tested;
        if let Some(rank) = outcome.found {
            let witness = binom.unrank(n, k, rank);
            return Ok(DimensionResult {
                variant,
                value: DimensionValue::Finite(k),
                witness: Some(witness),
                certificate: None,
                subsets_checked: checked,
                elapsed_ms: start.elapsed().as_millis() as u64,
                infinite_reason: None,
            });
        }
        if limit < total {
            return Err(Error::BudgetExhausted { budget: opts.subset_budget.unwrap_or(0) });
        }
        offset += total;
    }

    if !variant.may_be_infinite() {
        unreachable!("{variant} always has a resolving set of size at most n - 1");
    }
    let pruned = if constraints.is_empty() { "" } else { ", K-end constraints applied" };
    Ok(DimensionResult {
        variant,
        value: DimensionValue::Infinite,
        witness: None,
        certificate: Some(format!("exhausted all {} non-empty subsets{pruned}", offset)),
        subsets_checked: checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
        infinite_reason: Some(InfiniteReason::Exhausted),
    })
}

/// Solves every variant for one graph.
pub fn all_dimensions(g: &Graph, opts: &SolverOptions) -> Result<Vec<DimensionResult>> {
    let dm = all_pairs_distances(g)?;
    Variant::ALL.iter().map(|&v| dimension_with(g, &dm, v, opts)).collect()
}

#[derive(Debug, Clone, Copy)]
struct MaskConstraint {
    ends: u32,
    min: u32,
    max: u32,
}

impl From<&RequiredVertices> for MaskConstraint {
    fn from(r: &RequiredVertices) -> Self {
        let ends = r.ends.iter().fold(0u32, |m, &v| m | (1 << v));
        let (min, max) = match r.requirement {
            Requirement::ExactlyOne => (1, 1),
            Requirement::AtLeast(t) => (t as u32, u32::MAX),
            Requirement::Unsatisfiable => (1, 0),
        };
        MaskConstraint { ends, min, max }
    }
}

fn admissible(constraints: &[MaskConstraint], mask: u32) -> bool {
    constraints.iter().all(|c| {
        let hit = (mask & c.ends).count_ones();
        hit >= c.min && hit <= c.max
    })
}

/// Resolvability test over packed representations.
///
/// A multiset is packed as the sum of `1 << (5 * d)` over its distances
/// (five-bit counters per distance); a vector as consecutive five-bit
/// fields. Both are injective for `n <= PACKED_LIMIT`.
struct Evaluator {
    n: usize,
    kind: Kind,
    scope: Scope,
    dist: Vec<u8>,
    edges: Vec<(usize, usize)>,
}

impl Evaluator {
    fn new(g: &Graph, dm: &DistMatrix, variant: Variant) -> Self {
        let n = g.n();
        let dist = (0..n * n).map(|i| dm.get(i / n, i % n) as u8).collect();
        Evaluator { n, kind: variant.kind(), scope: variant.scope(), dist, edges: g.edges().collect() }
    }

    fn key(&self, u: usize, members: &[usize]) -> u128 {
        let row = &self.dist[u * self.n..(u + 1) * self.n];
        match self.kind {
            Kind::Multiset => members.iter().map(|&w| 1u128 << (5 * row[w] as u32)).sum(),
            Kind::Vector => members.iter().fold(0u128, |acc, &w| (acc << 5) | row[w] as u128),
        }
    }

    fn resolves(&self, mask: u32, members: &[usize]) -> bool {
        let mut keys = [0u128; PACKED_LIMIT];
        let outer = matches!(self.scope, Scope::PairsOutside | Scope::AdjacentPairsOutside);
        match self.scope {
            Scope::AllPairs | Scope::PairsOutside => {
                let mut len = 0;
                for u in 0..self.n {
                    if outer && mask & (1 << u) != 0 {
                        continue;
                    }
                    keys[len] = self.key(u, members);
                    len += 1;
                }
                let keys = &mut keys[..len];
                keys.sort_unstable();
                keys.windows(2).all(|p| p[0] != p[1])
            }
            Scope::AdjacentPairs | Scope::AdjacentPairsOutside => {
                for (u, key) in keys.iter_mut().enumerate().take(self.n) {
                    if !(outer && mask & (1 << u) != 0) {
                        *key = self.key(u, members);
                    }
                }
                self.edges.iter().all(|&(a, b)| (outer && (mask >> a | mask >> b) & 1 != 0) || keys[a] != keys[b])
            }
        }
    }
}

struct Binomials {
    table: Vec<Vec<u64>>,
}

impl Binomials {
    fn new(n: usize) -> Self {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for i in 0..=n {
            table[i][0] = 1;
            for j in 1..=i {
                table[i][j] = table[i - 1][j - 1] + if j < i { table[i - 1][j] } else { 0 };
            }
        }
        Binomials { table }
    }

    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.table[n][k]
        }
    }

    /// The `rank`-th k-subset of `0..n` in lexicographic order.
    fn unrank(&self, n: usize, k: usize, mut rank: u64) -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        let mut next = 0;
        for slot in 0..k {
            let remaining = k - slot - 1;
            loop {
                let block = self.get(n - next - 1, remaining);
                if rank < block {
                    break;
                }
                rank -= block;
                next += 1;
            }
            out.push(next);
            next += 1;
        }
        out
    }
}

/// Advances `c` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `(lo, hi, found, tested)` for one shard chunk.
type ShardReport = (u64, u64, Option<u64>, u64);

struct LevelOutcome {
    found: Option<u64>,
    /// Subsets actually tested with rank not above `found`.
    tested: u64,
}

struct Level<'a> {
    n: usize,
    k: usize,
    limit: u64,
    binom: &'a Binomials,
    eval: &'a Evaluator,
    constraints: &'a [MaskConstraint],
}

impl Level<'_> {
    /// Scans ranks `lo..hi`, stopping at the first success or once ranks
    /// exceed `stop()`. Returns the success rank and the number tested.
    fn scan(&self, lo: u64, hi: u64, stop: impl Fn() -> u64) -> (Option<u64>, u64) {
        if lo >= hi {
            return (None, 0);
        }
        let mut comb = self.binom.unrank(self.n, self.k, lo);
        let mut tested = 0;
        let mut rank = lo;
        loop {
            if rank > stop() {
                return (None, tested);
            }
            let mask = comb.iter().fold(0u32, |m, &v| m | (1 << v));
            if admissible(self.constraints, mask) {
                tested += 1;
                if self.eval.resolves(mask, &comb) {
                    return (Some(rank), tested);
                }
            }
            rank += 1;
            if rank >= hi || !next_combination(&mut comb, self.n) {
                return (None, tested);
            }
        }
    }

    fn run_sequential(&self) -> LevelOutcome {
        let (found, tested) = self.scan(0, self.limit, || u64::MAX);
        LevelOutcome { found, tested }
    }

    fn run_parallel(&self, shards: usize) -> LevelOutcome {
        let chunk = (self.limit / (shards as u64 * 8)).max(32);
        let chunks = self.limit.div_ceil(chunk) as usize;
        let next = AtomicUsize::new(0);
        let best = AtomicU64::new(u64::MAX);
        let results: Mutex<Vec<ShardReport>> = Mutex::new(Vec::new());
        std::thread::scope(|s| {
            for _ in 0..shards.min(chunks) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= chunks {
                        break;
                    }
                    let lo = i as u64 * chunk;
                    let hi = (lo + chunk).min(self.limit);
                    if lo > best.load(Ordering::Relaxed) {
                        continue;
                    }
                    let (found, tested) = self.scan(lo, hi, || best.load(Ordering::Relaxed));
                    if let Some(r) = found {
                        best.fetch_min(r, Ordering::Relaxed);
                    }
                    results.lock().unwrap().push((lo, hi, found, tested));
                });
            }
        });
        let results = results.into_inner().unwrap();
        let found = results.iter().filter_map(|r| r.2).min();
        let tested = match found {
            None => results.iter().map(|r| r.3).sum(),
            Some(b) => results.iter().filter(|&&(lo, hi, _, _)| hi <= b || (lo..hi).contains(&b)).map(|r| r.3).sum(),
        };
        LevelOutcome { found, tested }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::is_resolving;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn solve(g: &Graph, v: Variant) -> DimensionResult {
        dimension(g, v, &SolverOptions::default()).unwrap()
    }

    /// Independent oracle: lexicographic scan with the allocation-based predicate.
    fn brute(g: &Graph, v: Variant) -> (DimensionValue, Option<Vec<usize>>) {
        let dm = all_pairs_distances(g).unwrap();
        let n = g.n();
        for k in 1..=n {
            let mut subsets: Vec<Vec<usize>> = (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
                .collect();
            subsets.sort();
            for s in subsets {
                if is_resolving(&dm, g, &s, v).unwrap() {
                    return (DimensionValue::Finite(k), Some(s));
                }
            }
        }
        (DimensionValue::Infinite, None)
    }

    #[test]
    fn unrank_matches_iteration() {
        let b = Binomials::new(7);
        for k in 1..=7 {
            let mut c: Vec<usize> = (0..k).collect();
            let mut rank = 0;
            loop {
                assert_eq!(b.unrank(7, k, rank), c);
                rank += 1;
                if !next_combination(&mut c, 7) {
                    break;
                }
            }
            assert_eq!(rank, b.get(7, k));
        }
    }

    #[test]
    fn cycle_examples() {
        let r = solve(&cycle(6), Variant::Lmd);
        assert_eq!((r.value, r.witness), (DimensionValue::Finite(1), Some(vec![0])));
        assert_eq!(solve(&cycle(7), Variant::Lmd).value, DimensionValue::Finite(3));
        assert_eq!(solve(&cycle(5), Variant::Lmd).value, DimensionValue::Infinite);
        assert_eq!(solve(&cycle(5), Variant::LdimMs).value, DimensionValue::Finite(2));
        assert_eq!(solve(&cycle(5), Variant::Md).value, DimensionValue::Infinite);
    }

    #[test]
    fn complete_examples() {
        assert_eq!(solve(&complete(6), Variant::LdimMs).value, DimensionValue::Finite(5));
        assert_eq!(solve(&complete(2), Variant::Lmd).value, DimensionValue::Finite(1));
        assert_eq!(solve(&path(5), Variant::Ldim).value, DimensionValue::Finite(1));
    }

    #[test]
    fn infinite_paths_are_both_recorded() {
        let c5 = cycle(5);
        let shortcut = solve(&c5, Variant::Md);
        assert!(matches!(shortcut.infinite_reason, Some(InfiniteReason::Structural(_))));
        assert_eq!(shortcut.subsets_checked, 0);
        let scan = dimension(&c5, Variant::Md, &SolverOptions::naive()).unwrap();
        assert_eq!(scan.infinite_reason, Some(InfiniteReason::Exhausted));
        assert_eq!(scan.subsets_checked, 31);
        assert!(scan.certificate.unwrap().contains("31"));
    }

    #[test]
    fn pruning_skips_subsets_but_not_answers() {
        // Bowtie: two triangles sharing vertex 0.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let pruned = solve(&g, Variant::Lmd);
        let naive = dimension(&g, Variant::Lmd, &SolverOptions::naive()).unwrap();
        assert_eq!((pruned.value, &pruned.witness), (naive.value, &naive.witness));
        assert_eq!(pruned.value, DimensionValue::Finite(2));
        assert!(pruned.subsets_checked < naive.subsets_checked);
    }

    #[test]
    fn required_vertex_constraints() {
        let caps = Caps::default();
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let req = required_vertices(&bowtie, Variant::Lmd, &caps).unwrap();
        assert_eq!(req.len(), 2);
        assert!(req.iter().all(|r| r.requirement == Requirement::ExactlyOne));

        // K4 with a pendant on vertex 0: vertices 1, 2, 3 are K-end.
        let mut edges: Vec<_> = complete(4).edges().collect();
        edges.push((0, 4));
        let g = Graph::from_edges(5, edges).unwrap();
        let req = required_vertices(&g, Variant::Lmd, &caps).unwrap();
        assert_eq!(req[0].requirement, Requirement::Unsatisfiable);
        let req = required_vertices(&g, Variant::LdimMs, &caps).unwrap();
        assert_eq!(req[0].requirement, Requirement::AtLeast(2));
        assert!(!req[0].derived_from_proof);

        let req = required_vertices(&bowtie, Variant::LdimMs, &caps).unwrap();
        assert!(req.iter().all(|r| r.requirement == Requirement::AtLeast(1) && r.derived_from_proof));

        assert!(required_vertices(&cycle(6), Variant::Lmd, &caps).unwrap().is_empty());
        assert!(required_vertices(&bowtie, Variant::Dim, &caps).unwrap().is_empty());
    }

    #[test]
    fn certify_examples() {
        assert!(certify(&cycle(4), &[0], Variant::Lmd).unwrap().is_valid());
        for w in [[0, 1], [0, 2], [1, 3], [2, 3]] {
            match certify(&complete(4), &w, Variant::Lmd).unwrap() {
                Certificate::Invalid { violating_pairs } => {
                    assert!(!violating_pairs.is_empty());
                }
                Certificate::Valid => panic!("K4 cannot be resolved by {w:?}"),
            }
        }
        assert_eq!(certify(&cycle(4), &[], Variant::Lmd), Err(Error::EmptyLandmarks));
        assert!(matches!(certify(&cycle(4), &[7], Variant::Lmd), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut graphs = vec![cycle(3), cycle(5), cycle(6), complete(4), path(4)];
        graphs.push(Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap());
        graphs.push(Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap());
        for g in &graphs {
            for v in Variant::ALL {
                let r = solve(g, v);
                assert_eq!((r.value, r.witness.clone()), brute(g, v), "{v} on {:?}", g);
            }
        }
    }

    #[test]
    fn parallel_is_deterministic() {
        let g = cycle(13);
        let seq = solve(&g, Variant::Lmd);
        for shards in [2, 3, 8] {
            let par = dimension(&g, Variant::Lmd, &SolverOptions::default().with_shards(shards)).unwrap();
            assert_eq!((par.value, &par.witness, par.subsets_checked), (seq.value, &seq.witness, seq.subsets_checked));
        }
        let c11 = cycle(11);
        let seq = dimension(&c11, Variant::Md, &SolverOptions::naive()).unwrap();
        let par = dimension(&c11, Variant::Md, &SolverOptions::naive().with_shards(4)).unwrap();
        assert_eq!((par.value, &par.witness, par.subsets_checked), (seq.value, &seq.witness, seq.subsets_checked));
    }

    #[test]
    fn budget_is_inconclusive_not_wrong() {
        // C7 needs three landmarks: 7 + 21 subsets precede level three.
        let opts = SolverOptions { subset_budget: Some(20), ..Default::default() };
        assert_eq!(dimension(&cycle(7), Variant::Lmd, &opts), Err(Error::BudgetExhausted { budget: 20 }));
        let opts = SolverOptions { subset_budget: Some(1000), ..Default::default() };
        assert_eq!(dimension(&cycle(7), Variant::Lmd, &opts).unwrap().value, DimensionValue::Finite(3));
        let opts = SolverOptions { subset_budget: Some(20), ..SolverOptions::naive() };
        assert!(matches!(dimension(&cycle(5), Variant::Md, &opts), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn cap_is_enforced() {
        let opts = SolverOptions { caps: Caps { solver: 6, ..Caps::default() }, ..Default::default() };
        assert!(matches!(dimension(&cycle(7), Variant::Lmd, &opts), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn json_shape() {
        let r = solve(&cycle(5), Variant::Lmd);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["value"], "infinity");
        assert_eq!(v["variant"], "lmd");
        assert!(v["witness"].is_null());
        let r = solve(&cycle(7), Variant::Lmd);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["value"], 3);
        assert_eq!(v["witness"].as_array().unwrap().len(), 3);
        assert!(v.get("infinite_reason").is_none());
    }
}
