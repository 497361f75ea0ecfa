//! Deterministic constructors for the graph families studied here, a compact
//! string grammar for naming them, and an exhaustive enumerator of small
//! connected graphs.
//!
//! Labelling contracts (so that witnesses are reproducible):
//!
//! | family | grammar | labelling |
//! |---|---|---|
//! | path | `path:n` | `0 - 1 - ... - n-1` |
//! | cycle | `cycle:n` | `i ~ i+1 (mod n)` |
//! | complete | `complete:n` | `0..n` |
//! | star | `star:s` | centre `0`, leaves `1..=s` |
//! | wheel | `wheel:n` | rim `0..n` in cyclic order, hub `n` |
//! | amal | `amal:n1,n2,...` | shared vertex `0`, then each clique's other vertices in order |
//! | edge_amal | `edge_amal:n1,...` | shared edge `0 - 1`, then each clique's other vertices |
//! | corona | `corona:<base>/m1,...` | base vertices keep their ids, then the copies of `K_mi` in order |
//! | join | `join:<a>+<b>` | `a`'s vertices, then `b`'s shifted by `|a|` |
//! | unicyclic | `unicyclic:c/r=p1,p2/...` | cycle `0..c`, then tree vertices per attachment |
//! | gadget | `gadget:n` | see [`gen_clique_gadget`] |
//!
//! In `unicyclic`, each `/r=p1,...,pm` hangs a tree of `m` new vertices
//! `t1..tm` from cycle vertex `r`; `pi = 0` attaches `ti` to `r`, and
//! `pi = j` (with `j < i`) attaches it to `tj`.

use std::fmt;
use std::str::FromStr;

use crate::bounds::ceil_log2;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeAttachment {
    pub root: usize,
    pub parents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Amal(Vec<usize>),
    EdgeAmal(Vec<usize>),
    Corona { base: Box<FamilySpec>, orders: Vec<usize> },
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Unicyclic { cycle: usize, trees: Vec<TreeAttachment> },
    CliqueGadget(usize),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn complete_edges(vertices: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            edges.push((a, b));
        }
    }
}

impl FamilySpec {
    /// Vertex count, after validating parameters.
    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Star(s) => s + 1,
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::Amal(ns) => 1 + ns.iter().map(|x| x - 1).sum::<usize>(),
            FamilySpec::EdgeAmal(ns) => 2 + ns.iter().map(|x| x - 2).sum::<usize>(),
            FamilySpec::Corona { base, orders } => base.order()? + orders.iter().sum::<usize>(),
            FamilySpec::Join(a, b) => a.order()? + b.order()?,
            FamilySpec::Unicyclic { cycle, trees } => cycle + trees.iter().map(|t| t.parents.len()).sum::<usize>(),
            FamilySpec::CliqueGadget(n) => gadget_order(*n),
        })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Path(n) if *n < 1 => Err(invalid("path needs n >= 1")),
            FamilySpec::Cycle(n) if *n < 3 => Err(invalid("cycle needs n >= 3")),
            FamilySpec::Complete(n) if *n < 1 => Err(invalid("complete needs n >= 1")),
            FamilySpec::Star(s) if *s < 1 => Err(invalid("star needs at least one leaf")),
            FamilySpec::Wheel(n) if *n < 3 => Err(invalid("wheel needs n >= 3 rim vertices")),
            FamilySpec::Amal(ns) if ns.len() < 2 => Err(invalid("amal needs m >= 2 cliques")),
            FamilySpec::Amal(ns) if ns.contains(&0) => Err(invalid("amal needs every n_i >= 1")),
            FamilySpec::EdgeAmal(ns) if ns.len() < 2 => Err(invalid("edge_amal needs m >= 2 cliques")),
            FamilySpec::EdgeAmal(ns) if ns.iter().any(|&x| x < 2) => Err(invalid("edge_amal needs every n_i >= 2")),
            FamilySpec::Corona { base, orders } => {
                let b = base.order()?;
                if orders.len() != b {
                    return Err(invalid(format!(
                        "corona needs one clique order per base vertex ({b}), got {}",
                        orders.len()
                    )));
                }
                if orders.contains(&0) {
                    return Err(invalid("corona needs every m_i >= 1"));
                }
                Ok(())
            }
            FamilySpec::Join(a, b) => a.validate().and(b.validate()),
            FamilySpec::Unicyclic { cycle, trees } => {
                if *cycle < 3 {
                    return Err(invalid("unicyclic needs cycle length >= 3"));
                }
                for t in trees {
                    if t.root >= *cycle {
                        return Err(invalid(format!("attachment vertex {} is not on the cycle", t.root)));
                    }
                    if t.parents.is_empty() {
                        return Err(invalid("empty tree attachment"));
                    }
                    for (i, &p) in t.parents.iter().enumerate() {
                        if p > i {
                            return Err(invalid(format!("tree vertex t{} has parent t{p} not before it", i + 1)));
                        }
                    }
                }
                Ok(())
            }
            FamilySpec::CliqueGadget(n) if *n < 2 => Err(invalid("gadget needs n >= 2")),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges = Vec::new();
        let n = match self {
            FamilySpec::Path(n) => {
                edges.extend((1..*n).map(|i| (i - 1, i)));
                *n
            }
            FamilySpec::Cycle(n) => {
                edges.extend((0..*n).map(|i| (i, (i + 1) % n)));
                *n
            }
            FamilySpec::Complete(n) => {
                complete_edges(&(0..*n).collect::<Vec<_>>(), &mut edges);
                *n
            }
            FamilySpec::Star(s) => {
                edges.extend((1..=*s).map(|i| (0, i)));
                s + 1
            }
            FamilySpec::Wheel(n) => {
                edges.extend((0..*n).flat_map(|i| [(i, (i + 1) % n), (i, *n)]));
                n + 1
            }
            FamilySpec::Amal(ns) => {
                let mut next = 1;
                for &size in ns {
                    let mut members = vec![0];
                    members.extend(next..next + size - 1);
                    next += size - 1;
                    complete_edges(&members, &mut edges);
                }
                next
            }
            FamilySpec::EdgeAmal(ns) => {
                let mut next = 2;
                edges.push((0, 1));
                for &size in ns {
                    let mut members = vec![0, 1];
                    members.extend(next..next + size - 2);
                    next += size - 2;
                    complete_edges(&members, &mut edges);
                }
                next
            }
            FamilySpec::Corona { base, orders } => {
                let g = base.generate()?;
                edges.extend(g.edges());
                let mut next = g.n();
                for (i, &m) in orders.iter().enumerate() {
                    let mut members = vec![i];
                    members.extend(next..next + m);
                    next += m;
                    complete_edges(&members, &mut edges);
                }
                next
            }
            FamilySpec::Join(a, b) => {
                let (ga, gb) = (a.generate()?, b.generate()?);
                let shift = ga.n();
                edges.extend(ga.edges());
                edges.extend(gb.edges().map(|(u, v)| (u + shift, v + shift)));
                for u in 0..shift {
                    edges.extend((0..gb.n()).map(|v| (u, v + shift)));
                }
                shift + gb.n()
            }
            FamilySpec::Unicyclic { cycle, trees } => {
                edges.extend((0..*cycle).map(|i| (i, (i + 1) % cycle)));
                let mut next = *cycle;
                for t in trees {
                    let base = next;
                    for (i, &p) in t.parents.iter().enumerate() {
                        let parent = if p == 0 { t.root } else { base + p - 1 };
                        edges.push((parent, base + i));
                    }
                    next += t.parents.len();
                }
                next
            }
            FamilySpec::CliqueGadget(n) => return Ok(gen_clique_gadget(*n)?.graph),
        };
        let g = Graph::from_edges(n, edges)?;
        g.ensure_connected()?;
        Ok(g)
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| invalid(format!("`{s}` is not a non-negative integer")))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(parse_usize).collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (tag, rest) = s.split_once(':').ok_or_else(|| invalid(format!("`{s}`: expected `<family>:<params>`")))?;
        let spec = match tag {
            "path" => FamilySpec::Path(parse_usize(rest)?),
            "cycle" => FamilySpec::Cycle(parse_usize(rest)?),
            "complete" => FamilySpec::Complete(parse_usize(rest)?),
            "star" => FamilySpec::Star(parse_usize(rest)?),
            "wheel" => FamilySpec::Wheel(parse_usize(rest)?),
            "amal" => FamilySpec::Amal(parse_list(rest)?),
            "edge_amal" => FamilySpec::EdgeAmal(parse_list(rest)?),
            "gadget" => FamilySpec::CliqueGadget(parse_usize(rest)?),
            "corona" => {
                let (base, orders) =
                    rest.rsplit_once('/').ok_or_else(|| invalid("corona expects `corona:<base>/<m1,...>`"))?;
                FamilySpec::Corona { base: Box::new(base.parse()?), orders: parse_list(orders)? }
            }
            "join" => {
                let (a, b) = rest.split_once('+').ok_or_else(|| invalid("join expects `join:<a>+<b>`"))?;
                FamilySpec::Join(Box::new(a.parse()?), Box::new(b.parse()?))
            }
            "unicyclic" => {
                let mut parts = rest.split('/');
                let cycle = parse_usize(parts.next().unwrap_or(""))?;
                let trees = parts
                    .map(|p| {
                        let (root, parents) = p
                            .split_once('=')
                            .ok_or_else(|| invalid(format!("tree attachment `{p}` expects `root=parents`")))?;
                        Ok(TreeAttachment { root: parse_usize(root)?, parents: parse_list(parents)? })
                    })
                    .collect::<Result<Vec<_>>>()?;
                FamilySpec::Unicyclic { cycle, trees }
            }
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn join_list(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Amal(ns) => write!(f, "amal:{}", join_list(ns)),
            FamilySpec::EdgeAmal(ns) => write!(f, "edge_amal:{}", join_list(ns)),
            FamilySpec::Corona { base, orders } => write!(f, "corona:{base}/{}", join_list(orders)),
            FamilySpec::Join(a, b) => write!(f, "join:{a}+{b}"),
            FamilySpec::Unicyclic { cycle, trees } => {
                write!(f, "unicyclic:{cycle}")?;
                for t in trees {
                    write!(f, "/{}={}", t.root, join_list(&t.parents))?;
                }
                Ok(())
            }
            FamilySpec::CliqueGadget(n) => write!(f, "gadget:{n}"),
        }
    }
}

/// Convenience: parse and build in one step.
pub fn gen(spec: &str) -> Result<Graph> {
    spec.parse::<FamilySpec>()?.generate()
}

/// A graph with clique number `n` whose local (outer) multiset dimension is
/// `ceil(log2 n)`, together with the resolving landmark set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGadget {
    pub graph: Graph,
    /// `u_{j,2j}` for `j = 1..=k`.
    pub landmarks: Vec<usize>,
    pub k: usize,
    /// Clique vertices: `u_1..u_k` first, then the surviving `v_i` by index.
    pub clique: Vec<usize>,
    /// `(vertex, index i)` for each surviving `v_i`.
    pub v_vertices: Vec<(usize, usize)>,
    /// Distance label of each clique vertex: `labels[c]` belongs to `clique[c]`,
    /// with coordinate `j` (0-based) in `{2(j+1), 2(j+1)+1}`.
    pub labels: Vec<Vec<u32>>,
    /// `paths[j]` lists `u_{j+1,1}, ..., u_{j+1,2(j+1)}`.
    pub paths: Vec<Vec<usize>>,
}

impl CliqueGadget {
    pub fn vertex_of_v(&self, i: usize) -> Option<usize> {
        self.v_vertices.iter().find(|&&(_, idx)| idx == i).map(|&(v, _)| v)
    }

    pub fn label_of(&self, vertex: usize) -> Option<&[u32]> {
        self.clique.iter().position(|&c| c == vertex).map(|p| self.labels[p].as_slice())
    }
}

fn gadget_order(n: usize) -> usize {
    if n <= 2 {
        return n;
    }
    let k = ceil_log2(n);
    n + k * (k + 1)
}

/// Builds the clique gadget for `n >= 2`.
///
/// With `k = ceil(log2 n)`, a clique on `2^k` vertices `u_1..u_k, v_0, ...,
/// v_{2^k-k-1}` carries parity labels: coordinate `j` of a label is `2j`
/// (even) or `2j+1` (odd). `v_0` is all-even, `v_{2^k-k-1}` all-odd, `u_j` is
/// even exactly at `j`, and the remaining mixed labels go to `v_1, v_2, ...`
/// in lexicographic order. A path `u_j, u_{j,1}, ..., u_{j,2j}` hangs from
/// each `u_j`, and every `v_i` whose label is even at `j` is joined to
/// `u_{j,1}`, so its distance to `u_{j,2j}` realises that coordinate. For
/// `n < 2^k`, vertices `v_1..v_{2^k-n}` are removed. For `n = 2` the gadget
/// is `K_2` with landmark `0`.
pub fn gen_clique_gadget(n: usize) -> Result<CliqueGadget> {
    if n < 2 {
        return Err(invalid("gadget needs n >= 2"));
    }
    if n == 2 {
        return Ok(CliqueGadget {
            graph: Graph::from_edges(2, [(0, 1)])?,
            landmarks: vec![0],
            k: 1,
            clique: vec![0, 1],
            v_vertices: vec![(1, 0)],
            labels: vec![vec![2], vec![3]],
            paths: vec![],
        });
    }
    let k = ceil_log2(n);
    let full = 1usize << k;
    // Parity patterns as bit vectors, bit j set = odd at coordinate j.
    let all_odd = full - 1;
    let single_even = |j: usize| all_odd & !(1 << j);
    let mut mixed: Vec<usize> = (1..all_odd).filter(|p| p.count_ones() as usize != k - 1).collect();
    // Lexicographic on (coordinate 0, coordinate 1, ...), even before odd.
    mixed.sort_by_key(|&p| (0..k).map(|j| (p >> j) & 1).collect::<Vec<_>>());

    let last = full - k - 1;
    let mut v_patterns: Vec<(usize, usize)> = vec![(0, 0)];
    v_patterns.extend(mixed.iter().enumerate().map(|(i, &p)| (i + 1, p)));
    v_patterns.push((last, all_odd));
    let removed = full - n;
    v_patterns.retain(|&(i, _)| i == 0 || i > removed);

    let label = |p: usize| -> Vec<u32> { (0..k).map(|j| 2 * (j as u32 + 1) + ((p >> j) & 1) as u32).collect() };

    let mut clique: Vec<usize> = (0..k).collect();
    let mut labels: Vec<Vec<u32>> = (0..k).map(|j| label(single_even(j))).collect();
    let mut v_vertices = Vec::new();
    for (slot, &(i, p)) in v_patterns.iter().enumerate() {
        let vertex = k + slot;
        clique.push(vertex);
        labels.push(label(p));
        v_vertices.push((vertex, i));
    }
    let mut next = clique.len();
    let mut paths = Vec::with_capacity(k);
    for j in 0..k {
        let len = 2 * (j + 1);
        paths.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }

    let mut edges = Vec::new();
    complete_edges(&clique, &mut edges);
    for (j, path) in paths.iter().enumerate() {
        edges.push((j, path[0]));
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    for (slot, &(_, p)) in v_patterns.iter().enumerate() {
        for (j, path) in paths.iter().enumerate() {
            if (p >> j) & 1 == 0 {
                edges.push((k + slot, path[0]));
            }
        }
    }
    let graph = Graph::from_edges(next, edges)?;
    graph.ensure_connected()?;
    Ok(CliqueGadget {
        landmarks: paths.iter().map(|p| *p.last().unwrap()).collect(),
        graph,
        k,
        clique,
        v_vertices,
        labels,
        paths,
    })
}

/// Every connected graph on labelled vertices `0..n`, `1 <= n <= 7`, each
/// exactly once, in increasing order of the upper-triangle edge bitmask.
pub fn all_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > 7 {
        return Err(Error::CapExceeded { what: "labelled graph enumeration", n, cap: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("valid pairs");
        g.is_connected().then_some(g)
    }))
}
