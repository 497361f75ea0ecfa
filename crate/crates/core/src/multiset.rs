//! Distance representations of vertices with respect to a landmark set, and
//! the resolving predicate for each of the six dimension variants.
//!
//! This is the straightforward, allocation-based route. The solver uses a
//! packed encoding of the same representations for speed; the two are
//! cross-checked in tests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, Graph};

/// Ordered distance vector `(d(u, w_1), ..., d(u, w_k))`, landmarks ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation(pub Vec<u32>);

/// Canonical multiset of distances: the sorted vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn from_distances(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        Multiset(values)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Vector,
    Multiset,
}

/// Which vertex pairs must be told apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    AllPairs,
    AdjacentPairs,
    PairsOutside,
    AdjacentPairsOutside,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Dim,
    Ldim,
    Md,
    DimMs,
    Lmd,
    LdimMs,
}

impl Variant {
    pub const ALL: [Variant; 6] =
        [Variant::Dim, Variant::Ldim, Variant::Md, Variant::DimMs, Variant::Lmd, Variant::LdimMs];

    pub fn kind(self) -> Kind {
        match self {
            Variant::Dim | Variant::Ldim => Kind::Vector,
            _ => Kind::Multiset,
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            Variant::Dim | Variant::Md => Scope::AllPairs,
            Variant::Ldim | Variant::Lmd => Scope::AdjacentPairs,
            Variant::DimMs => Scope::PairsOutside,
            Variant::LdimMs => Scope::AdjacentPairsOutside,
        }
    }

    /// Only MD and LMD can be infinite; the others are bounded by `n - 1`.
    pub fn may_be_infinite(self) -> bool {
        matches!(self, Variant::Md | Variant::Lmd)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Dim => "dim",
            Variant::Ldim => "ldim",
            Variant::Md => "md",
            Variant::DimMs => "dim_ms",
            Variant::Lmd => "lmd",
            Variant::LdimMs => "ldim_ms",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variant `{s}`")))
    }
}

/// Sorted, deduplicated copy of `w`, checked non-empty and in range.
pub(crate) fn normalize_landmarks(n: usize, w: &[usize]) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let mut set = w.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&bad) = set.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    Ok(set)
}

pub fn representation(dm: &DistMatrix, u: usize, w: &[usize]) -> Result<Representation> {
    let set = normalize_landmarks(dm.n(), w)?;
    check_vertex(dm, u)?;
    Ok(Representation(set.iter().map(|&x| dm.get(u, x)).collect()))
}

/// `m(u|W)`: the multiset of distances from `u` to the landmarks.
pub fn representation_multiset(dm: &DistMatrix, u: usize, w: &[usize]) -> Result<Multiset> {
    let set = normalize_landmarks(dm.n(), w)?;
    check_vertex(dm, u)?;
    Ok(multiset_of(dm, u, &set))
}

fn multiset_of(dm: &DistMatrix, u: usize, set: &[usize]) -> Multiset {
    Multiset::from_distances(set.iter().map(|&x| dm.get(u, x)).collect())
}

fn check_vertex(dm: &DistMatrix, u: usize) -> Result<()> {
    if u >= dm.n() {
        Err(Error::VertexOutOfRange { vertex: u, n: dm.n() })
    } else {
        Ok(())
    }
}

/// Vertex pairs `(u, v)`, `u < v`, that the variant requires to be
/// distinguished by `w`.
pub(crate) fn pairs_in_scope(g: &Graph, w: &[usize], scope: Scope) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut inside = vec![false; n];
    for &x in w {
        inside[x] = true;
    }
    let outside = |p: &(usize, usize)| !inside[p.0] && !inside[p.1];
    match scope {
        Scope::AllPairs => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Scope::PairsOutside => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(outside).collect(),
        Scope::AdjacentPairs => g.edges().collect(),
        Scope::AdjacentPairsOutside => g.edges().filter(outside).collect(),
    }
}

/// Every in-scope pair whose representations coincide, in lexicographic
/// order. Empty exactly when `w` resolves `g` for `variant`.
pub fn violating_pairs(dm: &DistMatrix, g: &Graph, w: &[usize], variant: Variant) -> Result<Vec<(usize, usize)>> {
    let set = normalize_landmarks(g.n(), w)?;
    let pairs = pairs_in_scope(g, &set, variant.scope());
    let equal: Box<dyn Fn(usize, usize) -> bool> = match variant.kind() {
        Kind::Vector => Box::new(|a, b| set.iter().all(|&x| dm.get(a, x) == dm.get(b, x))),
        Kind::Multiset => Box::new(|a, b| multiset_of(dm, a, &set) == multiset_of(dm, b, &set)),
    };
    Ok(pairs.into_iter().filter(|&(a, b)| equal(a, b)).collect())
}

pub fn is_resolving(dm: &DistMatrix, g: &Graph, w: &[usize], variant: Variant) -> Result<bool> {
    Ok(violating_pairs(dm, g, w, variant)?.is_empty())
}
