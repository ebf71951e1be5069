//! Text formats: a line-oriented edge list and graph6.
//!
//! Edge list: the first non-comment line holds `n`, every later non-comment line
//! holds one edge `u v` with 0-based endpoints. Lines starting with `#` and blank
//! lines are skipped.
//!
//! graph6: the format used by nauty. A `>>graph6<<` prefix is accepted on input
//! and never written.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{ordered, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} out of range for n={n}")]
    EndpointOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph6: bad header: {0}")]
    BadHeader(String),
    #[error("graph6: truncated payload: expected {expected} bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("graph6: non-canonical padding bits in final byte")]
    NonCanonicalPadding,
    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6: {0} trailing bytes after payload")]
    TrailingData(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Guesses the format from the first non-whitespace byte: a digit or `#` means
/// edge list, anything else graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    match text.trim_start().bytes().next() {
        Some(b) if b.is_ascii_digit() || b == b'#' => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = |reason: &str| ParseError::Malformed {
            line,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 1 {
                return Err(malformed("expected the vertex count on its own line"));
            }
            n = Some(
                fields[0]
                    .parse()
                    .map_err(|_| malformed("vertex count is not a non-negative integer"))?,
            );
            continue;
        };
        if fields.len() != 2 {
            return Err(malformed("expected two endpoints"));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| malformed("endpoint is not a non-negative integer"))?;
            if *slot >= count {
                return Err(ParseError::EndpointOutOfRange {
                    line,
                    vertex: *slot,
                    n: count,
                });
            }
        }
        let [u, v] = ends;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let e = ordered(u, v);
        if !seen.insert(e) {
            return Err(ParseError::DuplicateEdge { line, u: e.0, v: e.1 });
        }
    }
    let n = n.ok_or_else(|| ParseError::Malformed {
        line: 0,
        reason: "missing vertex count".to_string(),
    })?;
    Ok(Graph::from_edges(n, seen).expect("edges validated while parsing"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_PREFIX: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(G6_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::BadHeader("empty input".into()));
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidByte { offset, byte });
        }
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| ParseError::BadHeader("header cut short".into()))
    };
    let (n, header_len) = if bytes[0] != 126 {
        (six(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        ((six(1)? << 12) | (six(2)? << 6) | six(3)?, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | six(i)?;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(ParseError::TruncatedPayload {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(ParseError::TrailingData(payload.len() - expected));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && ((payload[expected - 1] - 63) & ((1u8 << pad) - 1)) != 0 {
        return Err(ParseError::NonCanonicalPadding);
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 payload encodes a simple graph"))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
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
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("2\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap(), c4());
        assert_eq!(
            parse_edge_list("3\n0 0"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("# header\n3\n0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge { line: 4, u: 0, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3\n0 5"),
            Err(ParseError::EndpointOutOfRange { line: 2, vertex: 5, n: 3 })
        );
        assert!(matches!(
            parse_edge_list("3\n0 1 2"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(parse_edge_list("# nothing"), Err(ParseError::Malformed { .. })));
    }

    #[test]
    fn graph6_k2() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(ParseError::BadHeader(_))));
        assert!(matches!(parse_graph6("~"), Err(ParseError::BadHeader(_))));
        // C4 needs one payload byte
        assert!(matches!(parse_graph6("C"), Err(ParseError::TruncatedPayload { expected: 1, found: 0 })));
        // K2 has 1 bit of payload, so the low five bits must be clear
        assert_eq!(parse_graph6("A`"), Err(ParseError::NonCanonicalPadding));
        assert_eq!(parse_graph6("A_?"), Err(ParseError::TrailingData(1)));
        assert!(matches!(parse_graph6("A 1"), Err(ParseError::InvalidByte { offset: 1, .. })));
    }

    #[test]
    fn graph6_long_header() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("4\n0 1"), GraphFormat::EdgeList);
        assert_eq!(detect_format("# c\n4"), GraphFormat::EdgeList);
        assert_eq!(detect_format("Cr"), GraphFormat::Graph6);
        assert_eq!(parse_graph("Cr", None).unwrap().n(), 4);
    }
}
