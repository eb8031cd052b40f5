//! Greedy rainbow path extension.
//!
//! The basic lengthening move: while some endpoint has a neighbor outside
//! the path reachable through a color the path does not use yet, absorb it.
//! A path that survives this loop is *greedy-maximal*; the counting
//! argument behind the ceil((k+1)/2) lower bound only needs an endpoint
//! that is blocked in this sense, so greedy extension is both the cheap
//! first phase of the solver and the step used inside the restricted
//! subgraph during a cycle escape.

use crate::graph::EdgeColoredGraph;
use crate::rainbow::{RainbowPath, RainbowViolation};

/// Extends `p` until neither endpoint admits a move, trying the front
/// before the back and always taking the smallest eligible neighbor.
/// The input path survives as a contiguous subsequence of the result.
pub fn greedy_extend(
    g: &EdgeColoredGraph,
    p: &RainbowPath,
) -> Result<RainbowPath, RainbowViolation> {
    extend_impl(g, p, true)
}

/// Extends `p` at the back only, leaving the front endpoint pinned.
///
/// Used when the front must stay exposed for splicing: the escape step
/// grows a path from a designated start vertex inside the restricted
/// subgraph, then glues that start onto a partial cycle walk. Back-blocked
/// maximality is all the endpoint counting argument needs, so the bound
/// guarantee survives this restriction.
pub fn greedy_extend_back(
    g: &EdgeColoredGraph,
    p: &RainbowPath,
) -> Result<RainbowPath, RainbowViolation> {
    extend_impl(g, p, false)
}

/// True when `greedy_extend` would return `p` unchanged: no endpoint has
/// an unvisited neighbor through an unused color.
pub fn is_greedy_maximal(
    g: &EdgeColoredGraph,
    p: &RainbowPath,
) -> Result<bool, RainbowViolation> {
    let (on_path, used) = occupancy(g, p)?;
    Ok(pick_move(g, p.first(), &on_path, &used).is_none()
        && pick_move(g, p.last(), &on_path, &used).is_none())
}

fn extend_impl(
    g: &EdgeColoredGraph,
    p: &RainbowPath,
    both_ends: bool,
) -> Result<RainbowPath, RainbowViolation> {
    let (mut on_path, mut used) = occupancy(g, p)?;
    let mut vertices = p.vertices().to_vec();
    loop {
        if both_ends {
            if let Some((nb, color)) = pick_move(g, vertices[0], &on_path, &used) {
                vertices.insert(0, nb);
                on_path[nb] = true;
                used[color] = true;
                continue;
            }
        }
        let back = *vertices.last().expect("nonempty path");
        if let Some((nb, color)) = pick_move(g, back, &on_path, &used) {
            vertices.push(nb);
            on_path[nb] = true;
            used[color] = true;
            continue;
        }
        break;
    }
    RainbowPath::new(g, vertices)
}

/// Re-validates `p` against `g` and returns its vertex/color occupancy
/// maps. Guards against paths built for a different graph.
fn occupancy(
    g: &EdgeColoredGraph,
    p: &RainbowPath,
) -> Result<(Vec<bool>, Vec<bool>), RainbowViolation> {
    crate::rainbow::check_rainbow_path(g, p.vertices())?;
    let mut on_path = vec![false; g.num_vertices()];
    for &v in p.vertices() {
        on_path[v] = true;
    }
    let mut used = vec![false; g.num_colors()];
    for &c in p.colors() {
        used[c] = true;
    }
    Ok((on_path, used))
}

/// Smallest neighbor of `endpoint` outside the path whose edge color is
/// unused, if any. Adjacency lists are neighbor-sorted, so the first hit
/// is the deterministic choice.
fn pick_move(
    g: &EdgeColoredGraph,
    endpoint: usize,
    on_path: &[bool],
    used: &[bool],
) -> Option<(usize, usize)> {
    g.neighbors(endpoint)
        .iter()
        .copied()
        .find(|&(nb, color)| !on_path[nb] && !used[color])
}
