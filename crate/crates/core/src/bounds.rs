//! Closed-form lower bounds, the `n - 1` upper bound, and structural
//! certificates of infinite (local) multiset dimension.
//!
//! Bounds never replace solving; they annotate results, let the solver stop
//! early on certified-infinite inputs, and are cross-checked against exact
//! values by the verification harness.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, invariants, k_end_structure, two_core, Caps, DistMatrix, Graph, Subgraph};
use crate::multiset::Variant;
use crate::solver::{DimensionResult, DimensionValue};

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Smallest `k >= 1` with `C(k+d-1, d-1) + C(k+d-2, d-1) - d + 1 >= chi`:
/// the number of landmarks needed before multisets over distances `0..=d`
/// can supply `chi` pairwise distinct colours.
///
/// Panics if `d < 2` or `chi < 1`.
pub fn g(d: usize, chi: usize) -> usize {
    assert!(d >= 2 && chi >= 1, "g(d, chi) needs d >= 2 and chi >= 1");
    let target = BigUint::from(chi) + BigUint::from(d);
    (1..).find(|&k| binomial(k + d - 1, d - 1) + binomial(k + d - 2, d - 1) + BigUint::one() >= target).unwrap()
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// `ceil(log2 omega)`.
    CliqueLog,
    /// `g(diameter, chi)`, for diameter at least two.
    ChromaticGdchi,
    /// Non-bipartite graphs need two landmarks.
    Nonbipartite2,
    /// `n - 1` (at least 1): all but one vertex is always outer-resolving.
    NMinus1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub source: BoundSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantBounds {
    pub variant: Variant,
    /// Largest applicable lower bound (at least 1).
    pub lower: usize,
    pub lower_bounds: Vec<Bound>,
    pub upper: Option<Bound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum InfiniteCertificate {
    /// Diameter at most two and not a path.
    DiamLe2 { diameter: u32 },
    /// Three vertices with identical open neighbourhoods.
    TripleOpenNeighborhood { vertices: [usize; 3], neighborhood: Vec<usize> },
    /// A clique with three or more K-end vertices.
    TripleKEnd { clique: Vec<usize>, ends: Vec<usize> },
}

impl InfiniteCertificate {
    pub fn variant(&self) -> Variant {
        match self {
            InfiniteCertificate::DiamLe2 { .. } | InfiniteCertificate::TripleOpenNeighborhood { .. } => Variant::Md,
            InfiniteCertificate::TripleKEnd { .. } => Variant::Lmd,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            InfiniteCertificate::DiamLe2 { .. } => "diam_le_2",
            InfiniteCertificate::TripleOpenNeighborhood { .. } => "triple_open_neighborhood",
            InfiniteCertificate::TripleKEnd { .. } => "triple_k_end",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            InfiniteCertificate::DiamLe2 { diameter } => {
                format!("diam_le_2: diameter {diameter} and not a path")
            }
            InfiniteCertificate::TripleOpenNeighborhood { vertices, neighborhood } => {
                format!("triple_open_neighborhood: vertices {:?} share open neighbourhood {:?}", vertices, neighborhood)
            }
            InfiniteCertificate::TripleKEnd { clique, ends } => {
                format!("triple_k_end: clique {:?} has K-end vertices {:?}", clique, ends)
            }
        }
    }
}

fn is_path(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n() && (0..g.n()).all(|u| g.degree(u) <= 2)
}

pub fn infinite_certificates(g: &Graph) -> Result<Vec<InfiniteCertificate>> {
    let dm = all_pairs_distances(g)?;
    infinite_certificates_with(g, &dm, &Caps::default())
}

pub fn infinite_certificates_with(g: &Graph, dm: &DistMatrix, caps: &Caps) -> Result<Vec<InfiniteCertificate>> {
    let mut out = Vec::new();
    let diameter = dm.diameter();
    if diameter <= 2 && !is_path(g) {
        out.push(InfiniteCertificate::DiamLe2 { diameter });
    }
    let mut classes: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for u in 0..g.n() {
        classes.entry(g.neighbors(u)).or_default().push(u);
    }
    let mut triples: Vec<_> = classes
        .into_iter()
        .filter(|(_, members)| members.len() >= 3)
        .map(|(nb, m)| InfiniteCertificate::TripleOpenNeighborhood {
            vertices: [m[0], m[1], m[2]],
            neighborhood: nb.to_vec(),
        })
        .collect();
    triples.sort_by_key(|c| match c {
        InfiniteCertificate::TripleOpenNeighborhood { vertices, .. } => vertices[0],
        _ => unreachable!(),
    });
    out.extend(triples);
    for kc in k_end_structure(g, caps)? {
        if kc.ends.len() >= 3 {
            out.push(InfiniteCertificate::TripleKEnd { clique: kc.clique, ends: kc.ends });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub diameter: u32,
    pub omega: usize,
    pub chi: usize,
    pub bipartite: bool,
    pub variants: Vec<VariantBounds>,
    pub infinite: Vec<InfiniteCertificate>,
}

impl BoundReport {
    pub fn for_variant(&self, v: Variant) -> Option<&VariantBounds> {
        self.variants.iter().find(|b| b.variant == v)
    }

    pub fn lower(&self, v: Variant) -> usize {
        self.for_variant(v).map_or(1, |b| b.lower)
    }
}

pub fn lower_bounds(g: &Graph, caps: &Caps) -> Result<BoundReport> {
    let dm = all_pairs_distances(g)?;
    let inv = invariants(g, &dm, caps)?;
    let n = g.n();

    let mut local = Vec::new();
    let clique_log = ceil_log2(inv.omega);
    if clique_log > 0 {
        local.push(Bound { value: clique_log, source: BoundSource::CliqueLog });
    }
    if inv.diameter >= 2 {
        local.push(Bound { value: self::g(inv.diameter as usize, inv.chi), source: BoundSource::ChromaticGdchi });
    }
    if !inv.is_bipartite() {
        local.push(Bound { value: 2, source: BoundSource::Nonbipartite2 });
    }
    let lower = local.iter().map(|b| b.value).max().unwrap_or(1).max(1);
    let n_minus_1 = Bound { value: (n - 1).max(1), source: BoundSource::NMinus1 };

    let variants = vec![
        VariantBounds { variant: Variant::Lmd, lower, lower_bounds: local.clone(), upper: None },
        VariantBounds { variant: Variant::LdimMs, lower, lower_bounds: local, upper: Some(n_minus_1.clone()) },
        VariantBounds { variant: Variant::DimMs, lower: 1, lower_bounds: Vec::new(), upper: Some(n_minus_1) },
    ];
    Ok(BoundReport {
        n,
        diameter: inv.diameter,
        omega: inv.omega,
        chi: inv.chi,
        bipartite: inv.is_bipartite(),
        variants,
        infinite: infinite_certificates_with(g, &dm, caps)?,
    })
}

/// Checks that `dim_ms = n - 1` exactly when the graph is regular with
/// diameter at most two. The single-vertex graph is vacuously accepted.
pub fn dms_extremal_check(g: &Graph, solved: &DimensionResult) -> Result<bool> {
    if solved.variant != Variant::DimMs {
        return Err(Error::InvalidArgument(format!("expected a dim_ms result, got {}", solved.variant)));
    }
    let n = g.n();
    if n == 1 {
        return Ok(true);
    }
    let dm = all_pairs_distances(g)?;
    let extremal = solved.value == DimensionValue::Finite(n - 1);
    Ok(extremal == (g.is_regular() && dm.diameter() <= 2))
}

/// The maximal leafless subgraph `H` and the inequalities it implies:
/// `lmd(G) <= lmd(H)` when the right side is finite, and
/// `ldim_ms(G) <= ldim_ms(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSubgraphBound {
    pub core: Subgraph,
}

impl MaxSubgraphBound {
    pub const VARIANTS: [Variant; 2] = [Variant::Lmd, Variant::LdimMs];

    /// Whether exact values for `G` and `H` satisfy the claim for `variant`.
    pub fn holds(variant: Variant, graph_value: DimensionValue, core_value: DimensionValue) -> bool {
        match variant {
            Variant::Lmd if core_value.is_infinite() => true,
            _ => graph_value <= core_value,
        }
    }
}

pub fn maxsubgraph_bound(g: &Graph) -> Result<MaxSubgraphBound> {
    Ok(MaxSubgraphBound { core: two_core(g)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{dimension, SolverOptions};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Count of distinct representation multisets available with k landmarks
    /// in a graph of diameter d, by direct enumeration of distance multisets.
    fn multiset_capacity(k: usize, d: usize) -> usize {
        // Outside W: multisets of size k over {1..d}.
        fn count(len: usize, max: usize) -> usize {
            if len == 0 {
                return 1;
            }
            (1..=max).map(|top| count(len - 1, top)).sum()
        }
        let outside = count(k, d);
        // Inside W: {0} plus a multiset of size k-1 over {1..d}; at most one of
        // the d "constant" multisets {0, i^(k-1)} can occur simultaneously.
        let inside = count(k - 1, d);
        outside + inside - (d - 1)
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(2, 2), 1);
        assert_eq!(g(2, 6), 3);
        assert_eq!(g(3, 7), 2);
    }

    #[test]
    fn g_matches_enumerated_capacity() {
        for d in 2..=5 {
            for chi in 1..=40 {
                let k = (1..).find(|&k| multiset_capacity(k, d) >= chi).unwrap();
                assert_eq!(g(d, chi), k, "d={d} chi={chi}");
            }
        }
    }

    #[test]
    fn g_small_diameter_closed_forms() {
        for chi in 1..=50usize {
            assert_eq!(g(2, chi), chi.div_ceil(2).max(1));
            // Smallest k with (k+1)^2 - 2 >= chi, i.e. ceil(sqrt(chi+2) - 1).
            let expected = (1..).find(|&k: &usize| (k + 1) * (k + 1) >= chi + 2).unwrap();
            assert_eq!(g(3, chi), expected);
        }
    }

    #[test]
    fn lower_bound_examples() {
        let caps = Caps::default();
        let c7 = lower_bounds(&cycle(7), &caps).unwrap();
        assert_eq!(c7.lower(Variant::Lmd), 2);
        assert!(c7
            .for_variant(Variant::Lmd)
            .unwrap()
            .lower_bounds
            .contains(&Bound { value: 2, source: BoundSource::Nonbipartite2 }));
        let c6 = lower_bounds(&cycle(6), &caps).unwrap();
        assert_eq!(c6.lower(Variant::Lmd), 1);
        assert_eq!(c6.lower(Variant::LdimMs), 1);
        assert_eq!(c6.for_variant(Variant::LdimMs).unwrap().upper.as_ref().unwrap().value, 5);
    }

    #[test]
    fn certificates() {
        let c5 = infinite_certificates(&cycle(5)).unwrap();
        assert_eq!(c5, vec![InfiniteCertificate::DiamLe2 { diameter: 2 }]);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let certs = infinite_certificates(&star).unwrap();
        assert!(
            certs.contains(&InfiniteCertificate::TripleOpenNeighborhood { vertices: [1, 2, 3], neighborhood: vec![0] })
        );

        // K4 and K3 sharing vertex 0.
        let mut edges: Vec<_> = complete(4).edges().collect();
        edges.extend([(0, 4), (0, 5), (4, 5)]);
        let amal = Graph::from_edges(6, edges).unwrap();
        let certs = infinite_certificates(&amal).unwrap();
        assert!(certs
            .iter()
            .any(|c| matches!(c, InfiniteCertificate::TripleKEnd { ends, .. } if ends == &vec![1, 2, 3])));

        // Short paths have diameter <= 2 but finite md.
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(infinite_certificates(&p3).unwrap().is_empty());
    }

    #[test]
    fn dms_extremal() {
        let opts = SolverOptions::default();
        for g in [complete(5), cycle(5), Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()] {
            let r = dimension(&g, Variant::DimMs, &opts).unwrap();
            assert!(dms_extremal_check(&g, &r).unwrap());
        }
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(dimension(&p4, Variant::DimMs, &opts).unwrap().value, DimensionValue::Finite(1));
        let wrong = dimension(&p4, Variant::Lmd, &opts).unwrap();
        assert!(dms_extremal_check(&p4, &wrong).is_err());
    }

    #[test]
    fn maxsubgraph() {
        let opts = SolverOptions::default();
        let mut edges: Vec<_> = cycle(5).edges().collect();
        edges.push((0, 5));
        let g = Graph::from_edges(6, edges).unwrap();
        let b = maxsubgraph_bound(&g).unwrap();
        assert_eq!(b.core.vertices, vec![0, 1, 2, 3, 4]);
        let gv = dimension(&g, Variant::LdimMs, &opts).unwrap().value;
        let hv = dimension(&b.core.graph, Variant::LdimMs, &opts).unwrap().value;
        assert_eq!((gv, hv), (DimensionValue::Finite(2), DimensionValue::Finite(2)));
        assert!(MaxSubgraphBound::holds(Variant::LdimMs, gv, hv));

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(maxsubgraph_bound(&p4), Err(Error::NoLeaflessSubgraph));
    }
}
