//! graph6 and edge-list serialization.
//!
//! graph6 follows McKay's format: a size field (one byte for n < 63, `~`
//! plus three bytes up to 258047, `~~` plus six bytes beyond), then the upper
//! triangle of the adjacency matrix in column order, packed six bits per byte
//! with 63 added to each byte.

use std::fmt::Write as _;

use super::{Graph, GraphError};

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format `{other}` (expected g6 or edgelist)")),
        }
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let sextet = |b: u8| -> Result<usize, GraphError> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(GraphError::MalformedHeader(format!("byte {b} outside the printable graph6 range")))
        }
    };
    let take = |rest: &[u8], k: usize| -> Result<usize, GraphError> {
        if rest.len() < k {
            return Err(GraphError::MalformedHeader("truncated size field".into()));
        }
        rest[..k].iter().try_fold(0usize, |acc, &b| Ok(acc << 6 | sextet(b)?))
    };
    match bytes {
        [] => Err(GraphError::MalformedHeader("empty input".into())),
        [126, 126, rest @ ..] => Ok((take(rest, 6)?, &rest[6..])),
        [126, rest @ ..] => Ok((take(rest, 3)?, &rest[3..])),
        [b, rest @ ..] => Ok((sextet(*b)?, rest)),
    }
}

/// Encodes `g` as a single graph6 line, without header or newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let mut bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let (n, body) = decode_size(bytes)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::TrailingBits(format!(
            "expected {needed} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::MalformedHeader(format!("data byte {byte} outside the graph6 range")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[needed - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::TrailingBits("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes every non-empty line of a graph6 file.
pub fn parse_graph6_lines(text: &[u8]) -> Result<Vec<Graph>, GraphError> {
    text.split(|&b| b == b'\n')
        .map(|line| line.strip_suffix(b"\r").unwrap_or(line))
        .filter(|line| !line.is_empty())
        .map(parse_graph6)
        .collect()
}

/// `n m` header, then one `u v` line per edge (`u < v`, lexicographic).
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GraphError::MalformedHeader("missing `n m` header".into()))?;
    let nums = |line: &str| -> Result<(usize, usize), GraphError> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(GraphError::MalformedHeader(format!("expected two integers, got `{line}`"))),
        }
    };
    let (n, m) = nums(header)?;
    let edges = lines.map(nums).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(GraphError::MalformedHeader(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_vertex_is_at_sign() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(write_graph6(&g), b"@");
        assert_eq!(parse_graph6(b"@").unwrap(), g);
    }

    #[test]
    fn known_strings() {
        // Triangle and the 5-cycle 0-1-2-3-4-0 as produced by nauty's geng/showg.
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(write_graph6(&tri), b"Bw");
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(write_graph6(&c5), b"Dhc");
        assert_eq!(parse_graph6(b">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn large_size_field() {
        let n = 100;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let bytes = write_graph6(&g);
        assert_eq!(&bytes[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph6(b""), Err(GraphError::MalformedHeader(_))));
        assert_eq!(parse_graph6(b"?"), Err(GraphError::Empty));
        assert!(matches!(parse_graph6(b"Dhcc"), Err(GraphError::TrailingBits(_))));
        assert!(matches!(parse_graph6(b"Dh"), Err(GraphError::TrailingBits(_))));
        // n = 3 uses three data bits; `x` sets a padding bit.
        assert!(matches!(parse_graph6(b"Bx"), Err(GraphError::TrailingBits(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(GraphError::MalformedHeader(_))));
    }

    #[test]
    fn edgelist_examples() {
        let g = parse_edgelist("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(write_edgelist(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert!(matches!(parse_edgelist("3 1\n0 3"), Err(GraphError::OutOfRangeVertex { vertex: 3, n: 3 })));
        assert!(matches!(parse_edgelist("3 2\n0 1"), Err(GraphError::MalformedHeader(_))));
        assert!(matches!(parse_edgelist(""), Err(GraphError::MalformedHeader(_))));
    }

    #[test]
    fn multi_line_files() {
        let gs = parse_graph6_lines(b"Bw\nDhc\r\n\n@\n").unwrap();
        assert_eq!(gs.iter().map(Graph::order).collect::<Vec<_>>(), vec![3, 5, 1]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=40).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let bytes = write_graph6(&g);
            let back = parse_graph6(&bytes).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph6(&back), bytes);
        }

        #[test]
        fn edgelist_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
        }
    }
}
