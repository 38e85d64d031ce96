//! The undirected graph6 format.
//!
//! Size prefix: one byte `n + 63` for `n <= 62`, `~` plus three 6-bit bytes
//! for `n <= 258047`, `~~` plus six bytes beyond that. The upper triangle is
//! then packed column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits
//! per byte, big-endian, zero padded, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], i: usize) -> Result<u64> {
    match bytes.get(i) {
        None => Err(err(i, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(err(i, format!("byte 0x{b:02x} outside the graph6 range 63..=126"))),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    match bytes.first() {
        None => return Err(err(skip, "empty graph6 string")),
        Some(b':') => return Err(err(skip, "sparse6 input is not supported")),
        Some(b'&') => return Err(err(skip, "digraph6 input is not supported")),
        _ => {}
    }
    let shift = |e: Error| match e {
        Error::Graph6 { offset, message } => Error::Graph6 {
            offset: offset + skip,
            message,
        },
        other => other,
    };
    decode(bytes).map_err(shift)
}

fn decode(bytes: &[u8]) -> Result<Graph> {
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        (n as usize, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = pos + nbytes;
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!(
                "length mismatch: {n} vertices need {expected} bytes, found {}",
                bytes.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0;
    while k < nbits {
        let s = sextet(bytes, pos)?;
        for bit in (0..6).rev() {
            if k < nbits {
                if (s >> bit) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if (s >> bit) & 1 == 1 {
                return Err(err(pos, "nonzero padding bits"));
            }
        }
        pos += 1;
    }
    Graph::new(n, edges)
}

/// Standard graph6 encoding (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_small_graphs() {
        assert_eq!(encode_graph6(&Graph::complete(2)), "A_");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn corpus_labels_have_expected_shape() {
        let a = parse_graph6("H?ABePt").unwrap();
        assert_eq!((a.n(), a.m()), (9, 12));
        let mut d = a.degree_data().multiset;
        d.reverse();
        assert_eq!(d, vec![1, 2, 2, 2, 2, 3, 3, 4, 5]);

        let b = parse_graph6("HCpfdrk").unwrap();
        assert_eq!((b.n(), b.m()), (9, 18));
        let mut d = b.degree_data().multiset;
        d.reverse();
        assert_eq!(d, vec![3, 3, 4, 4, 4, 4, 4, 5, 5]);
    }

    #[test]
    fn header_and_newline_are_tolerated() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(":Fa@x^"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("&B?"), Err(Error::Graph6 { .. })));
        // n = 2 needs one body byte
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { .. })));
        // '`' = 96 -> 100001: padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A\x7f"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(
            parse_graph6(">>graph6<<A"),
            Err(Error::Graph6 { offset: 11, .. })
        ));
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::path(70);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
