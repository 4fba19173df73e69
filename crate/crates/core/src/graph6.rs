//! The graph6 text encoding.
//!
//! A size header followed by the upper triangle of the adjacency matrix in
//! column order ((0,1), (0,2), (1,2), (0,3), ...), six bits per byte, each byte
//! offset by 63. Only the shortest size header is accepted, so every input that
//! parses re-encodes to the same bytes.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
const SHORT_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;
const LONG_LIMIT: usize = (1 << 36) - 1;

fn fail(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(fail(format!("byte {:#04x} at offset {pos} is outside 63..=126", bytes[pos])));
    }
    let (n, body) = parse_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(fail(format!("expected {expected} data bytes for {n} vertices, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[index / 6] - OFFSET;
            if byte & (1 << (5 - index % 6)) != 0 {
                g.insert_edge(i, j);
            }
            index += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - OFFSET;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(fail("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let big = |digits: &[u8]| digits.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET));
    match bytes {
        [] => Err(fail("empty input")),
        [126, 126, rest @ ..] => {
            let digits = rest.get(..6).ok_or_else(|| fail("truncated size header"))?;
            let n = big(digits);
            if n <= MEDIUM_LIMIT {
                return Err(fail("size header longer than necessary"));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            let digits = rest.get(..3).ok_or_else(|| fail("truncated size header"))?;
            let n = big(digits);
            if n <= SHORT_LIMIT {
                return Err(fail("size header longer than necessary"));
            }
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok((usize::from(first - OFFSET), rest)),
    }
}

/// Encodes `g` without the optional header.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= LONG_LIMIT, "order {n} is beyond the graph6 size range");
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    let digits = |out: &mut Vec<u8>, count: usize| {
        for shift in (0..count).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + OFFSET);
        }
    };
    if n <= SHORT_LIMIT {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_LIMIT {
        out.push(126);
        digits(&mut out, 3);
    } else {
        out.extend([126, 126]);
        digits(&mut out, 6);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn decodes_star() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn two_vertex_graphs() {
        assert!(parse_graph6("A_").unwrap().same_edges(&complete(2)));
        assert_eq!(parse_graph6("A?").unwrap().edge_count(), 0);
        assert_eq!(emit_graph6(&complete(2)), "A_");
    }

    #[test]
    fn known_encodings() {
        // pairs in column order: (0,1), (0,2), (1,2)
        assert_eq!(emit_graph6(&path(3)), "Bg");
        assert_eq!(emit_graph6(&complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn long_headers_round_trip() {
        let g = cycle(63);
        let text = emit_graph6(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        let back = parse_graph6(&text).unwrap();
        assert!(back.same_edges(&g));
        assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("?"), Err(Error::EmptyGraph)));
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A_?"), Err(Error::Graph6(_))));
        // padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A\u{7f}"), Err(Error::Graph6(_))));
        // n = 2 written with the long header
        assert!(matches!(parse_graph6("~??A_"), Err(Error::Graph6(_))));
    }
}
