//! Escaping a rainbow cycle through an outside vertex.
//!
//! Given a rainbow cycle `CL` on `t+1` vertices, any edge from a cycle
//! vertex to the outside is a way out:
//!
//! - If its color is absent from the cycle, prepending the outside vertex
//!   to a full cycle walk already gives a rainbow path of length `t+1`.
//! - If its color matches a cycle edge, that edge can be deleted; the
//!   remaining arc ending at the chord's cycle endpoint, plus the chord,
//!   is a rainbow path that leaves the cycle. It is then grown further
//!   inside the *restricted subgraph* — the graph induced on the outside
//!   vertices with every cycle-colored edge removed — whose paths use only
//!   colors the cycle walk cannot clash with.
//!
//! The escape succeeds when some combination beats the path length `t`
//! that produced the cycle.

use std::collections::BTreeSet;

use super::extend::greedy_extend_back;
use crate::graph::EdgeColoredGraph;
use crate::rainbow::{RainbowCycle, RainbowPath};

/// Diagnostic snapshot of one escape attempt: the outside frontier, the
/// cycle color set with its head/tail windows, and the restricted
/// subgraph with its minimum color degree. Recorded in stall certificates
/// so a failed escape can be audited offline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeState {
    pub cycle: RainbowCycle,
    /// Vertices outside the cycle, ascending.
    pub outside: Vec<usize>,
    /// Per cycle position `i`: outside neighbors of `vertices[i]`,
    /// ascending.
    pub outside_neighbors: Vec<Vec<usize>>,
    /// `U`: dense colors on the cycle.
    pub cycle_colors: BTreeSet<usize>,
    /// Colors of the first `ceil(k/5)` cycle edges leaving `vertices[0]`.
    pub window_head: BTreeSet<usize>,
    /// Colors of the last `ceil(k/5)` cycle edges, closing edge included.
    pub window_tail: BTreeSet<usize>,
    /// Union of the two windows.
    pub window: BTreeSet<usize>,
    /// The restricted subgraph, densely re-indexed.
    pub restricted: EdgeColoredGraph,
    /// Restricted index -> original vertex id.
    pub restricted_vertices: Vec<usize>,
    /// Minimum color degree of the restricted subgraph.
    pub restricted_min_color_degree: usize,
}

/// Builds the restricted subgraph for a cycle: keep only vertices outside
/// the cycle and edges between them whose color the cycle does not use.
/// Returns the subgraph (vertices re-indexed densely, external color
/// values preserved) and the index-to-original-vertex mapping.
///
/// Panics if `cl` is not a valid rainbow cycle of `g`.
pub fn build_restricted_subgraph(
    g: &EdgeColoredGraph,
    cl: &RainbowCycle,
) -> (EdgeColoredGraph, Vec<usize>) {
    crate::rainbow::check_rainbow_cycle(g, cl.vertices()).expect("cycle must be valid in g");
    let mut on_cycle = vec![false; g.num_vertices()];
    for &v in cl.vertices() {
        on_cycle[v] = true;
    }
    let mut cycle_color = vec![false; g.num_colors()];
    for &c in cl.colors() {
        cycle_color[c] = true;
    }
    let outside: Vec<usize> = (0..g.num_vertices()).filter(|&v| !on_cycle[v]).collect();
    let mut new_index = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in outside.iter().enumerate() {
        new_index[v] = i;
    }
    let edges: Vec<(usize, usize, u64)> = g
        .edges()
        .iter()
        .filter(|e| !on_cycle[e.u] && !on_cycle[e.v] && !cycle_color[e.color])
        .map(|e| (new_index[e.u], new_index[e.v], e.color_value))
        .collect();
    let restricted = EdgeColoredGraph::new(outside.len(), &edges)
        .expect("filtering a valid graph keeps it valid");
    (restricted, outside)
}

/// Assembles the full [`EscapeState`] diagnostics for a cycle, using the
/// window width `ceil(k/5)`.
///
/// Panics if `cl` is not a valid rainbow cycle of `g`.
pub fn compute_escape_state(g: &EdgeColoredGraph, cl: &RainbowCycle, k: usize) -> EscapeState {
    let (restricted, restricted_vertices) = build_restricted_subgraph(g, cl);
    let mut on_cycle = vec![false; g.num_vertices()];
    for &v in cl.vertices() {
        on_cycle[v] = true;
    }
    let outside: Vec<usize> = (0..g.num_vertices()).filter(|&v| !on_cycle[v]).collect();
    let outside_neighbors: Vec<Vec<usize>> = cl
        .vertices()
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .map(|&(nb, _)| nb)
                .filter(|&nb| !on_cycle[nb])
                .collect()
        })
        .collect();

    let len = cl.len();
    let width = k.div_ceil(5).min(len);
    let window_head: BTreeSet<usize> = cl.colors()[..width].iter().copied().collect();
    let window_tail: BTreeSet<usize> = cl.colors()[len - width..].iter().copied().collect();
    let window: BTreeSet<usize> = window_head.union(&window_tail).copied().collect();
    let restricted_min_color_degree = restricted.min_color_degree();
    EscapeState {
        cycle: cl.clone(),
        outside,
        outside_neighbors,
        cycle_colors: cl.colors().iter().copied().collect(),
        window_head,
        window_tail,
        window,
        restricted,
        restricted_vertices,
        restricted_min_color_degree,
    }
}

/// Attempts to convert a rainbow cycle on `t+1` vertices into a rainbow
/// path of length strictly greater than `t`.
///
/// Every cycle vertex is tried as the exit point and every outside
/// neighbor as the exit, in ascending order. A fresh-colored exit edge
/// immediately yields a `t+1` path; an exit edge reusing a cycle color
/// deletes the matching cycle edge, walks the longer arc into the exit
/// point first, appends the outside vertex, and grows the tail inside the
/// restricted subgraph via back-only greedy extension. The first
/// combination that beats `t` is returned; `None` means every branch was
/// exhausted.
///
/// `k` is only used as the window width parameter for diagnostics-parity
/// with [`compute_escape_state`]; the search itself tries all exits
/// regardless of window membership, which can only find more than the
/// window-restricted variant.
///
/// Panics if `cl` is not a valid rainbow cycle of `g`.
pub fn escape_cycle(
    g: &EdgeColoredGraph,
    cl: &RainbowCycle,
    _k: usize,
) -> Option<RainbowPath> {
    crate::rainbow::check_rainbow_cycle(g, cl.vertices()).expect("cycle must be valid in g");
    let len = cl.len();
    let t = len - 1;
    let verts = cl.vertices();

    let mut on_cycle = vec![false; g.num_vertices()];
    for &v in verts {
        on_cycle[v] = true;
    }
    // Unique cycle edge index per color (the cycle is rainbow).
    let mut edge_of_color = vec![usize::MAX; g.num_colors()];
    for (i, &c) in cl.colors().iter().enumerate() {
        edge_of_color[c] = i;
    }

    let (restricted, outside) = build_restricted_subgraph(g, cl);
    let mut restricted_index = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in outside.iter().enumerate() {
        restricted_index[v] = i;
    }
    // Back-only greedy tail from an outside vertex, in original ids,
    // excluding the vertex itself. Independent of the exit point.
    let tail_from = |z: usize| -> Vec<usize> {
        let start = RainbowPath::singleton(restricted_index[z]);
        let grown = greedy_extend_back(&restricted, &start).expect("singleton is valid");
        grown.vertices()[1..].iter().map(|&w| outside[w]).collect()
    };

    for (r, &exit) in verts.iter().enumerate() {
        for &(z, color) in g.neighbors(exit) {
            if on_cycle[z] {
                continue;
            }
            let e = edge_of_color[color];
            if e == usize::MAX {
                // Fresh chord: outside vertex plus a full cycle walk that
                // starts at the exit (dropping the edge entering it).
                let mut path = vec![z];
                path.extend(cl.walk_without_edge((r + len - 1) % len));
                let p = RainbowPath::new(g, path)
                    .expect("fresh chord plus cycle walk is rainbow");
                return Some(p);
            }
            // Chord color matches cycle edge e; delete it and take an arc
            // ending at the exit. Longer arc first.
            let forward_len = (r + len - (e + 1)) % len; // v[e+1] .. v[r]
            let backward_len = (e + len - r) % len; // v[e] .. v[r]
            let arcs = if forward_len >= backward_len {
                [(forward_len, true), (backward_len, false)]
            } else {
                [(backward_len, false), (forward_len, true)]
            };
            for &(arc_len, forward) in &arcs {
                let mut path: Vec<usize> = Vec::with_capacity(arc_len + 2);
                if forward {
                    // v[e+1], v[e+2], ..., v[r]
                    for step in 0..=arc_len {
                        path.push(verts[(e + 1 + step) % len]);
                    }
                } else {
                    // v[e], v[e-1], ..., v[r]
                    for step in 0..=arc_len {
                        path.push(verts[(e + len - step) % len]);
                    }
                }
                debug_assert_eq!(*path.last().unwrap(), exit);
                path.push(z);
                path.extend(tail_from(z));
                if path.len() - 1 > t {
                    let p = RainbowPath::new(g, path)
                        .expect("arc, matching chord and restricted tail are rainbow");
                    return Some(p);
                }
            }
        }
    }
    None
}
