//! graph6 small format (at most 62 vertices).
//!
//! Byte 0 is `n + 63`. The upper triangle is then read column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte
//! (most significant first), zero-padded, each group offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use super::UndirectedGraph;

pub const MAX_GRAPH6_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("invalid graph6 character {ch:?} at column {column}")]
    InvalidCharacter { ch: char, column: usize },
    #[error("graph6 large-vertex format is not supported (at most 62 vertices)")]
    Unsupported,
    #[error("graph6 length mismatch: expected {expected} bytes for {n} vertices, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    #[error("graph on {0} vertices cannot be written in graph6 small format")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<UndirectedGraph, Graph6Error> {
    let record = text.trim();
    if record.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut bytes = Vec::with_capacity(record.len());
    for (i, ch) in record.chars().enumerate() {
        if !('?'..='~').contains(&ch) {
            return Err(Graph6Error::InvalidCharacter { ch, column: i + 1 });
        }
        bytes.push(ch as u8 - 63);
    }
    if bytes[0] == 63 {
        return Err(Graph6Error::Unsupported);
    }
    let n = bytes[0] as usize;
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::LengthMismatch { n, expected, found: bytes.len() });
    }
    let mut g = UndirectedGraph::new(n);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + pos / 6];
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                g.link(i, j);
            }
            pos += 1;
        }
    }
    Ok(g)
}

pub(crate) fn encode_bits(n: usize, bits: impl Iterator<Item = bool>) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Encodes `g` as a graph6 record without trailing newline.
pub fn to_graph6(g: &UndirectedGraph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j));
    let bytes = encode_bits(n, bits);
    Ok(bytes.into_iter().map(char::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_records() {
        // 'D' = 68 = 5 + 63; ten upper-triangle bits fit in two zero groups.
        let g = parse_graph6("D??").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        // 'A' = 2 vertices; '_' = 95 - 63 = 0b100000, the single bit x(0,1).
        let g = parse_graph6("A_\n").unwrap();
        assert_eq!(g.edges(), [(0, 1)]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6("~??~"), Err(Graph6Error::Unsupported));
        assert!(matches!(parse_graph6("D?"), Err(Graph6Error::LengthMismatch { n: 5, expected: 3, found: 2 })));
        assert!(matches!(parse_graph6("D? "), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(parse_graph6("D?a?"), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(parse_graph6("D!?"), Err(Graph6Error::InvalidCharacter { ch: '!', column: 2 })));
        assert_eq!(parse_graph6("  "), Err(Graph6Error::Empty));
    }

    #[test]
    fn encodes_known_strings() {
        assert_eq!(to_graph6(&UndirectedGraph::new(0)).unwrap(), "?");
        assert_eq!(to_graph6(&UndirectedGraph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&UndirectedGraph::complete(5)).unwrap(), "D~{");
        assert_eq!(to_graph6(&UndirectedGraph::new(5)).unwrap(), "D??");
        assert!(matches!(to_graph6(&UndirectedGraph::new(63)), Err(Graph6Error::TooLarge(63))));
    }
}
