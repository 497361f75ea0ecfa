use serde::{Deserialize, Serialize};

use super::{maximal_cliques, Caps, Graph};
use crate::error::{Error, Result};

/// An induced subgraph together with the original id of each of its vertices
/// (`vertices[i]` is the original id of subgraph vertex `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Maximal leafless subgraph, obtained by repeatedly deleting vertices of
/// degree at most one. Trees strip down to nothing and yield
/// [`Error::NoLeaflessSubgraph`].
pub fn two_core(g: &Graph) -> Result<Subgraph> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| degree[u] <= 1).collect();
    while let Some(u) = stack.pop() {
        if removed[u] {
            continue;
        }
        removed[u] = true;
        for &v in g.neighbors(u) {
            if !removed[v] {
                degree[v] -= 1;
                if degree[v] == 1 {
                    stack.push(v);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&u| !removed[u]).collect();
    if vertices.is_empty() {
        return Err(Error::NoLeaflessSubgraph);
    }
    let graph = g.induced_subgraph(&vertices)?;
    Ok(Subgraph { graph, vertices })
}

/// A maximal clique of order at least three and its K-end vertices: members
/// whose every neighbour lies inside the clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KEndClique {
    pub clique: Vec<usize>,
    pub ends: Vec<usize>,
}

pub fn k_end_structure(g: &Graph, caps: &Caps) -> Result<Vec<KEndClique>> {
    Ok(maximal_cliques(g, caps)?
        .into_iter()
        .filter(|c| c.len() >= 3)
        .map(|clique| {
            let r = clique.len();
            let ends = clique.iter().copied().filter(|&u| g.degree(u) == r - 1).collect();
            KEndClique { clique, ends }
        })
        .collect())
}
