//! Immutable edge-colored graphs and color-degree queries.
//!
//! Vertices are dense integers `0..n`. Edge colors are arbitrary `u64`
//! values as supplied by the caller; internally every color is re-indexed
//! into a dense range `0..num_colors` so that color sets can be handled as
//! small integer sets. All public APIs that *report* colors (violations,
//! serialization, DOT labels) speak the external values; everything in the
//! solver and oracle layers works on dense indices.

use std::collections::HashMap;
use thiserror::Error;

/// Construction-time validation failures. Each variant names the offending
/// edge so parsers can attach line numbers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A single undirected edge with its color, in both representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: usize,
    /// Larger endpoint.
    pub v: usize,
    /// Dense color index, `0..num_colors`.
    pub color: usize,
    /// The color value as supplied at construction.
    pub color_value: u64,
}

/// A simple undirected graph with one color per edge.
///
/// Immutable after construction; solvers take it by shared reference and
/// values may be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    /// Per-vertex adjacency `(neighbor, dense color)`, sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    /// Dense color index -> external color value, sorted ascending.
    color_values: Vec<u64>,
    /// Normalized `(min,max)` pair -> dense color.
    pair_color: HashMap<(usize, usize), usize>,
}

impl EdgeColoredGraph {
    /// Builds and validates a graph from `(u, v, color)` triples.
    ///
    /// Rejects self-loops, out-of-range endpoints and duplicate unordered
    /// pairs. Edge order in the input does not matter; the stored edge list
    /// is sorted by `(u, v)` and color indices are assigned by ascending
    /// external color value, so equal inputs build identical graphs.
    pub fn new(n: usize, edge_list: &[(usize, usize, u64)]) -> Result<Self, GraphError> {
        let mut seen: HashMap<(usize, usize), ()> = HashMap::with_capacity(edge_list.len());
        for &(u, v, _) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }

        let mut color_values: Vec<u64> = edge_list.iter().map(|&(_, _, c)| c).collect();
        color_values.sort_unstable();
        color_values.dedup();
        let color_index: HashMap<u64, usize> = color_values
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();

        let mut edges: Vec<Edge> = edge_list
            .iter()
            .map(|&(u, v, c)| Edge {
                u: u.min(v),
                v: u.max(v),
                color: color_index[&c],
                color_value: c,
            })
            .collect();
        edges.sort_unstable_by_key(|e| (e.u, e.v));

        let mut adj = vec![Vec::new(); n];
        let mut pair_color = HashMap::with_capacity(edges.len());
        for e in &edges {
            adj[e.u].push((e.v, e.color));
            adj[e.v].push((e.u, e.color));
            pair_color.insert((e.u, e.v), e.color);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        Ok(Self {
            n,
            edges,
            adj,
            color_values,
            pair_color,
        })
    }

    /// Number of vertices.
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Size of the color universe `C` (colors actually present on edges).
    pub fn num_colors(&self) -> usize {
        self.color_values.len()
    }

    /// External value of a dense color index.
    pub fn color_value(&self, color: usize) -> u64 {
        self.color_values[color]
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` as `(neighbor, dense color)`, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_color(u, v).is_some()
    }

    /// Dense color of the edge `u-v`, if present.
    pub fn edge_color(&self, u: usize, v: usize) -> Option<usize> {
        self.pair_color.get(&(u.min(v), u.max(v))).copied()
    }

    /// Plain degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of distinct colors on edges incident to `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut colors: Vec<usize> = self.adj[v].iter().map(|&(_, c)| c).collect();
        colors.sort_unstable();
        colors.dedup();
        Ok(colors.len())
    }

    /// Minimum color degree over all vertices; the largest `k` for which
    /// every vertex sees at least `k` distinct incident colors. An isolated
    /// vertex (or an empty graph) yields 0.
    pub fn min_color_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.color_degree(v).expect("vertex in range"))
            .min()
            .unwrap_or(0)
    }
}
