//! The `.ecg` text format for edge-colored graphs.
//!
//! ```text
//! # comment lines start with '#', blank lines are skipped
//! n m
//! u v c      (m lines; 0 <= u,v < n, u != v, c >= 0)
//! ```
//!
//! Parsing validates like graph construction does (range, self-loops,
//! duplicate unordered pairs) but reports the 1-based line number of the
//! offending input. Serialization is canonical — header, then edges
//! sorted by `(u, v)` with `u < v` — so `serialize(parse(x))` is a fixed
//! point and byte-stable across runs.

use thiserror::Error;

use crate::graph::EdgeColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcgError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected 'n m'")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}, expected 'u v c'")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header promised {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Parses `.ecg` text into a validated graph.
pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, EcgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|&(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EcgError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let (n, m) = match (
        parts.next().and_then(|s| s.parse::<usize>().ok()),
        parts.next().and_then(|s| s.parse::<usize>().ok()),
        parts.next(),
    ) {
        (Some(n), Some(m), None) => (n, m),
        _ => {
            return Err(EcgError::MalformedHeader {
                line: header_line,
                text: header.to_string(),
            })
        }
    };

    let mut edges: Vec<(usize, usize, u64)> = Vec::with_capacity(m);
    let mut pairs = std::collections::HashSet::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(EcgError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let mut parts = text.split_whitespace();
        let parsed = (
            parts.next().and_then(|s| s.parse::<usize>().ok()),
            parts.next().and_then(|s| s.parse::<usize>().ok()),
            parts.next().and_then(|s| s.parse::<u64>().ok()),
            parts.next(),
        );
        let (Some(u), Some(v), Some(c), None) = parsed else {
            return Err(EcgError::MalformedEdge {
                line,
                text: text.to_string(),
            });
        };
        if u >= n {
            return Err(EcgError::VertexOutOfRange { line, vertex: u, n });
        }
        if v >= n {
            return Err(EcgError::VertexOutOfRange { line, vertex: v, n });
        }
        if u == v {
            return Err(EcgError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !pairs.insert(key) {
            return Err(EcgError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push((u, v, c));
    }
    if edges.len() != m {
        return Err(EcgError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(EdgeColoredGraph::new(n, &edges).expect("validated line by line"))
}

/// Serializes a graph in canonical `.ecg` form.
pub fn serialize_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.color_value));
    }
    out
}
