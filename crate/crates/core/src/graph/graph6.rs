//! graph6 encoding: the vertex count `N(n)` followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable
//! character (offset 63).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        bytes.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted. The graph must be connected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let g = decode(text)?;
    g.ensure_connected()?;
    Ok(g)
}

pub(crate) fn decode(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.is_empty() {
        return Err(Error::parse(1, "empty graph6 string"));
    }
    let mut six = Vec::with_capacity(line.len());
    for (pos, b) in line.bytes().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1, format!("invalid graph6 character at offset {pos}")));
        }
        six.push(b - 63);
    }

    let (n, body) = match six.as_slice() {
        [63, 63, rest @ ..] => (read_size(rest, 6)?, &rest[6..]),
        [63, rest @ ..] => (read_size(rest, 3)?, &rest[3..]),
        [small, rest @ ..] => (*small as usize, rest),
        [] => unreachable!(),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(Error::parse(
            1,
            format!("expected {needed} adjacency characters for n = {n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn read_size(rest: &[u8], len: usize) -> Result<usize> {
    if rest.len() < len {
        return Err(Error::parse(1, "truncated graph6 size field"));
    }
    Ok(rest[..len].iter().fold(0usize, |acc, &c| (acc << 6) | c as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use proptest::prelude::*;

    #[test]
    fn star_example_decodes() {
        // Five vertices, vertex 4 adjacent to all others.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn triangle_matches_own_encoder() {
        let k3 = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        let enc = to_graph6(&k3);
        assert_eq!(enc, "Bw");
        assert_eq!(parse_graph6(&enc).unwrap(), k3);
        assert_eq!(parse_graph6(&format!(">>graph6<<{enc}\n")).unwrap(), k3);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D ?{"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
        // Four isolated vertices.
        assert!(matches!(parse_graph6("C?"), Err(Error::Disconnected(..))));
    }

    #[test]
    fn large_size_field() {
        let n = 70;
        let g = Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap();
        let enc = to_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    proptest! {
        #[test]
        fn encode_decode_identity(n in 1usize..14, seed in any::<u64>()) {
            let mut state = seed;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let enc = to_graph6(&g);
            let back = decode(&enc).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back), enc);
        }
    }
}
