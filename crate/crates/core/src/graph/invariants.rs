//! Exact clique number, chromatic number and bipartiteness.
//!
//! Both NP-hard invariants are computed exactly or not at all: inputs above
//! the configured [`Caps`] produce [`Error::CapExceeded`].

use serde::{Deserialize, Serialize};

use super::{DistMatrix, Graph};
use crate::error::{Error, Result};

/// Vertex-count ceilings for the exponential computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Dimension solver (subset enumeration).
    pub solver: usize,
    /// Maximal clique enumeration.
    pub clique: usize,
    /// Exact colouring.
    pub chromatic: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { solver: 20, clique: 20, chromatic: 16 }
    }
}

/// Hard ceiling for bitmask-based routines regardless of configured caps.
pub(crate) const MAX_MASK_VERTICES: usize = 64;

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_MASK_VERTICES);
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub diameter: u32,
    pub omega: usize,
    pub chi: usize,
    /// Side of each vertex (`false` = side containing vertex 0) when bipartite.
    pub bipartition: Option<Vec<bool>>,
}

impl GraphInvariants {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn invariants(g: &Graph, dm: &DistMatrix, caps: &Caps) -> Result<GraphInvariants> {
    let omega = clique_number(g, caps)?;
    let chi = chromatic_number(g, caps)?;
    Ok(GraphInvariants { diameter: dm.diameter(), omega, chi, bipartition: two_coloring(g) })
}

/// BFS 2-colouring; `None` when an odd cycle exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// All maximal cliques, each sorted, listed in lexicographic order.
pub fn maximal_cliques(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    check_cap("maximal clique enumeration", g.n(), caps.clique)?;
    let nbr: Vec<u64> = (0..g.n()).map(|u| g.neighbor_mask(u)).collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(&nbr, 0, all, 0, &mut out);
    let mut cliques: Vec<Vec<usize>> = out.into_iter().map(mask_to_vec).collect();
    cliques.sort();
    Ok(cliques)
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // Pivot maximising |P ∩ N(u)|.
    let pivot = {
        let mut best = 0;
        let mut best_cnt = -1i32;
        let mut cand = p | x;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let cnt = (p & nbr[u]).count_ones() as i32;
            if cnt > best_cnt {
                best_cnt = cnt;
                best = u;
            }
        }
        best
    };
    let mut cand = p & !nbr[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(nbr, r | (1 << v), p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

pub fn clique_number(g: &Graph, caps: &Caps) -> Result<usize> {
    Ok(maximal_cliques(g, caps)?.iter().map(Vec::len).max().unwrap_or(0))
}

/// Exact chromatic number by DSATUR-ordered branch and bound, seeded with
/// the clique number as lower bound.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("exact colouring", g.n(), caps.chromatic)?;
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if two_coloring(g).is_some() {
        return Ok(2);
    }
    let lower = clique_number(g, &Caps { clique: n, ..*caps })?;
    let mut search = Coloring { g, colour: vec![usize::MAX; n], forbidden: vec![0u64; n], best: n, lower };
    search.branch(0, 0);
    Ok(search.best)
}

struct Coloring<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// Bitmask of colours used by coloured neighbours.
    forbidden: Vec<u64>,
    best: usize,
    lower: usize,
}

impl Coloring<'_> {
    fn branch(&mut self, coloured: usize, used: usize) {
        if used >= self.best || self.best == self.lower {
            return;
        }
        if coloured == self.g.n() {
            self.best = used;
            return;
        }
        // DSATUR: max saturation, then max degree, then smallest id.
        let v = (0..self.g.n())
            .filter(|&u| self.colour[u] == usize::MAX)
            .max_by_key(|&u| (self.forbidden[u].count_ones(), self.g.degree(u), std::cmp::Reverse(u)))
            .unwrap();
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.forbidden[v] & (1 << c) != 0 {
                continue;
            }
            self.colour[v] = c;
            let saved: Vec<(usize, u64)> = self.g.neighbors(v).iter().map(|&u| (u, self.forbidden[u])).collect();
            for &u in self.g.neighbors(v) {
                self.forbidden[u] |= 1 << c;
            }
            self.branch(coloured + 1, used.max(c + 1));
            for (u, f) in saved {
                self.forbidden[u] = f;
            }
            self.colour[v] = usize::MAX;
            if self.best == self.lower {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        Graph::from_edges(n + 1, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n)])).unwrap()
    }

    /// Brute-force chromatic number: smallest k admitting a proper k-colouring.
    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let colours: Vec<usize> = (0..n)
                    .map(|_| {
                        let x = c % k;
                        c /= k;
                        x
                    })
                    .collect();
                if g.edges().all(|(u, v)| colours[u] != colours[v]) {
                    return k;
                }
            }
        }
        n
    }

    #[test]
    fn complete_and_cycle() {
        let caps = Caps::default();
        let k5 = complete(5);
        let inv = invariants(&k5, &all_pairs_distances(&k5).unwrap(), &caps).unwrap();
        assert_eq!((inv.omega, inv.chi, inv.diameter, inv.is_bipartite()), (5, 5, 1, false));

        let c6 = cycle(6);
        let inv = invariants(&c6, &all_pairs_distances(&c6).unwrap(), &caps).unwrap();
        assert_eq!((inv.omega, inv.chi, inv.diameter, inv.is_bipartite()), (2, 2, 3, true));
        let sides = inv.bipartition.unwrap();
        assert!(c6.edges().all(|(u, v)| sides[u] != sides[v]));
    }

    #[test]
    fn wheels_match_rim_parity() {
        // Even rim: rim 2-colourable, hub needs a third colour. Odd rim: 4.
        let caps = Caps::default();
        for n in 3..=12 {
            let w = wheel(n);
            let expected = if n % 2 == 0 { 3 } else { 4 };
            assert_eq!(chromatic_number(&w, &caps).unwrap(), expected, "W_{n}");
            assert_eq!(clique_number(&w, &caps).unwrap(), if n == 3 { 4 } else { 3 });
        }
        assert_eq!(brute_chi(&wheel(5)), 4);
        assert_eq!(brute_chi(&wheel(6)), 3);
    }

    #[test]
    fn chromatic_matches_brute_force() {
        // Petersen graph: chi 3, omega 2.
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let caps = Caps::default();
        assert_eq!(chromatic_number(&petersen, &caps).unwrap(), 3);
        assert_eq!(clique_number(&petersen, &caps).unwrap(), 2);
        for g in [cycle(5), cycle(7), complete(4), wheel(4)] {
            assert_eq!(chromatic_number(&g, &caps).unwrap(), brute_chi(&g));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { solver: 20, clique: 5, chromatic: 4 };
        assert!(matches!(clique_number(&cycle(6), &caps), Err(Error::CapExceeded { .. })));
        assert!(matches!(chromatic_number(&cycle(5), &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn maximal_cliques_of_bowtie() {
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(maximal_cliques(&bowtie, &Caps::default()).unwrap(), vec![vec![0, 1, 2], vec![0, 3, 4]]);
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::from_edges(1, []).unwrap();
        let caps = Caps::default();
        assert_eq!(clique_number(&k1, &caps).unwrap(), 1);
        assert_eq!(chromatic_number(&k1, &caps).unwrap(), 1);
        assert_eq!(two_coloring(&k1), Some(vec![false]));
    }
}
