//! Rainbow paths and cycles: validated vertex sequences whose edges all
//! carry pairwise-distinct colors.

use crate::graph::EdgeColoredGraph;
use thiserror::Error;

/// Why a vertex sequence fails to be a rainbow path or cycle. Colors are
/// reported as external values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowViolation {
    #[error("empty vertex sequence")]
    Empty,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("missing edge {0}-{1}")]
    MissingEdge(usize, usize),
    #[error("repeated vertex {0}")]
    RepeatedVertex(usize),
    #[error("repeated color {0}")]
    RepeatedColor(u64),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// Validates `seq` as a rainbow path in `g`. A single vertex is a valid
/// (length-0) path. On failure reports the first violated invariant in
/// scan order: range, adjacency, repeated vertex, repeated color.
pub fn check_rainbow_path(g: &EdgeColoredGraph, seq: &[usize]) -> Result<(), RainbowViolation> {
    check_sequence(g, seq, false)
}

/// Validates `seq` (closing edge `last-first` implied) as a rainbow cycle.
pub fn check_rainbow_cycle(g: &EdgeColoredGraph, seq: &[usize]) -> Result<(), RainbowViolation> {
    if seq.len() < 3 {
        return Err(RainbowViolation::CycleTooShort(seq.len()));
    }
    check_sequence(g, seq, true)
}

fn check_sequence(
    g: &EdgeColoredGraph,
    seq: &[usize],
    closed: bool,
) -> Result<(), RainbowViolation> {
    if seq.is_empty() {
        return Err(RainbowViolation::Empty);
    }
    let n = g.num_vertices();
    let mut seen_vertex = vec![false; n];
    let mut seen_color = vec![false; g.num_colors()];
    for (i, &v) in seq.iter().enumerate() {
        if v >= n {
            return Err(RainbowViolation::VertexOutOfRange { vertex: v, n });
        }
        if seen_vertex[v] {
            return Err(RainbowViolation::RepeatedVertex(v));
        }
        seen_vertex[v] = true;
        if i > 0 {
            let u = seq[i - 1];
            let color = g
                .edge_color(u, v)
                .ok_or(RainbowViolation::MissingEdge(u, v))?;
            if seen_color[color] {
                return Err(RainbowViolation::RepeatedColor(g.color_value(color)));
            }
            seen_color[color] = true;
        }
    }
    if closed {
        let (first, last) = (seq[0], seq[seq.len() - 1]);
        let color = g
            .edge_color(last, first)
            .ok_or(RainbowViolation::MissingEdge(last, first))?;
        if seen_color[color] {
            return Err(RainbowViolation::RepeatedColor(g.color_value(color)));
        }
    }
    Ok(())
}

/// A validated rainbow path: pairwise-distinct vertices joined by edges of
/// pairwise-distinct colors. Length is the edge count, one less than the
/// vertex count; a singleton vertex is the length-0 path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RainbowPath {
    vertices: Vec<usize>,
    /// Dense colors of the edges, in path order (`len() == vertices - 1`).
    colors: Vec<usize>,
}

impl RainbowPath {
    pub fn new(g: &EdgeColoredGraph, vertices: Vec<usize>) -> Result<Self, RainbowViolation> {
        check_rainbow_path(g, &vertices)?;
        let colors = vertices
            .windows(2)
            .map(|w| g.edge_color(w[0], w[1]).expect("validated edge"))
            .collect();
        Ok(Self { vertices, colors })
    }

    pub fn singleton(v: usize) -> Self {
        Self {
            vertices: vec![v],
            colors: Vec::new(),
        }
    }

    /// Path length = number of edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// True for the singleton (length-0) path.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dense edge colors in path order; the color set `U` has no duplicates.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("nonempty")
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Membership in the path color set `U`.
    pub fn uses_color(&self, color: usize) -> bool {
        self.colors.contains(&color)
    }
}

/// A validated rainbow cycle on `t+1` vertices, the closing edge implied
/// between the last and first vertex; all `t+1` edge colors distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCycle {
    vertices: Vec<usize>,
    /// Dense colors; `colors[i]` is the edge leaving `vertices[i]`, so the
    /// final entry is the closing edge's color. Same length as `vertices`.
    colors: Vec<usize>,
}

impl RainbowCycle {
    pub fn new(g: &EdgeColoredGraph, vertices: Vec<usize>) -> Result<Self, RainbowViolation> {
        check_rainbow_cycle(g, &vertices)?;
        let mut colors: Vec<usize> = vertices
            .windows(2)
            .map(|w| g.edge_color(w[0], w[1]).expect("validated edge"))
            .collect();
        colors.push(
            g.edge_color(vertices[vertices.len() - 1], vertices[0])
                .expect("validated closing edge"),
        );
        Ok(Self { vertices, colors })
    }

    /// Cycle length = number of edges = number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn uses_color(&self, color: usize) -> bool {
        self.colors.contains(&color)
    }

    /// The rainbow path obtained by deleting edge `i` (the edge leaving
    /// `vertices[i]`) and walking the remaining cycle. The result starts at
    /// `vertices[i+1]` and ends at `vertices[i]`.
    pub fn walk_without_edge(&self, i: usize) -> Vec<usize> {
        let n = self.vertices.len();
        (1..=n).map(|step| self.vertices[(i + step) % n]).collect()
    }
}
