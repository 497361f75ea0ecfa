//! Simple undirected graphs on dense vertex ids `0..n`, with ingestion from
//! edge lists and graph6, BFS distances, and the classical invariants the
//! resolvability bounds depend on.
//!
//! A [`Graph`] itself may be disconnected; every ingestion path
//! ([`parse_edge_list`], [`parse_graph6`], the family generators) rejects
//! disconnected input, and [`all_pairs_distances`] refuses it as well, so
//! downstream code can rely on finite distances.

mod distance;
mod graph6;
mod invariants;
mod structure;

pub use distance::{all_pairs_distances, distance_layers, DistMatrix};
pub use graph6::{parse_graph6, to_graph6};
pub use invariants::{
    chromatic_number, clique_number, invariants, maximal_cliques, two_coloring, Caps, GraphInvariants,
};
pub use structure::{k_end_structure, two_core, KEndClique, Subgraph};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph from an edge list. Duplicate edges are collapsed;
    /// loops and out-of-range endpoints are rejected. Connectivity is not
    /// checked here.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { line: 0, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Neighbourhood as a bitmask. Only meaningful for `n <= 64`.
    pub(crate) fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u].iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Returns a vertex not reachable from vertex 0, if any.
    pub(crate) fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            None => Ok(()),
            Some(v) => Err(Error::Disconnected(0, v)),
        }
    }

    /// Subgraph induced by `vertices` (sorted, deduplicated), relabelled so
    /// that the i-th smallest kept vertex becomes vertex i.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges)
    }

    /// Edge-list text, one `u v` pair per line. Graphs without edges (K1)
    /// produce an empty string.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses an edge list: one `u v` pair of 0-based vertex ids per line.
/// Blank lines and lines starting with `#` are ignored. The vertex count is
/// one more than the largest id, and the result must be connected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line_no, format!("expected `u v`, found `{line}`")));
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::parse(line_no, format!("`{tok}` is not a non-negative integer")))?;
        }
        let [u, v] = ids;
        if u == v {
            return Err(Error::LoopEdge { line: line_no, vertex: u });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = max_id.map(|m| m + 1).ok_or(Error::EmptyGraph)?;
    let g = Graph::from_edges(n, edges)?;
    g.ensure_connected()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_from_edge_list() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn triangle_from_edge_list() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
    }

    #[test]
    fn loop_edge_rejected() {
        assert_eq!(parse_edge_list("0 0"), Err(Error::LoopEdge { line: 1, vertex: 0 }));
    }

    #[test]
    fn comments_duplicates_and_errors() {
        let g = parse_edge_list("# a path\n\n0 1\n1 0\n  1 2  \n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(parse_edge_list("0 1\n1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_edge_list("# nothing"), Err(Error::EmptyGraph));
        assert!(matches!(parse_edge_list("0 1\n2 3"), Err(Error::Disconnected(0, 2))));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("0 3\n3 1\n1 2\n2 0").unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = parse_edge_list("0 1\n1 2\n2 3\n3 0").unwrap();
        let h = g.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
