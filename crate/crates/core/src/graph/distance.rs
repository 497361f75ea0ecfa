use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistMatrix> {
    let n = g.n();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(t) = row.iter().position(|&x| x == u32::MAX) {
            return Err(Error::Disconnected(s, t));
        }
    }
    Ok(DistMatrix { n, d })
}

/// Distance layers `N_0, N_1, ..., N_e` around `w`, where `e` is the
/// eccentricity of `w`. Each layer is sorted.
pub fn distance_layers(dm: &DistMatrix, w: usize) -> Result<Vec<Vec<usize>>> {
    if w >= dm.n() {
        return Err(Error::VertexOutOfRange { vertex: w, n: dm.n() });
    }
    let ecc = dm.eccentricity(w) as usize;
    let mut layers = vec![Vec::new(); ecc + 1];
    for (u, &dist) in dm.row(w).iter().enumerate() {
        layers[dist as usize].push(u);
    }
    Ok(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn basic_distances() {
        assert_eq!(all_pairs_distances(&cycle(4)).unwrap().get(0, 2), 2);
        let p4 = parse_edge_list("0 1\n1 2\n2 3").unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        assert_eq!(dm.get(0, 3), 3);
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn disconnected_names_pair() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(all_pairs_distances(&g), Err(Error::Disconnected(0, 2)));
    }

    #[test]
    fn layers() {
        let dm = all_pairs_distances(&cycle(4)).unwrap();
        assert_eq!(distance_layers(&dm, 0).unwrap(), vec![vec![0], vec![1, 3], vec![2]]);

        let star = parse_edge_list("0 1\n0 2\n0 3\n0 4").unwrap();
        let dm = all_pairs_distances(&star).unwrap();
        assert_eq!(distance_layers(&dm, 0).unwrap(), vec![vec![0], vec![1, 2, 3, 4]]);

        let p5 = parse_edge_list("0 1\n1 2\n2 3\n3 4").unwrap();
        let dm = all_pairs_distances(&p5).unwrap();
        let layers = distance_layers(&dm, 0).unwrap();
        assert_eq!(layers.len(), 5);
        assert!(layers.iter().all(|l| l.len() == 1));
        assert!(distance_layers(&dm, 5).is_err());
    }
}
