//! A deliberately naive rainbow path enumerator used as ground truth in
//! tests.
//!
//! It walks every simple path of the graph with no pruning and plain data
//! structures (`Vec<bool>` visited flags, a `HashSet` of used colors), so its
//! correctness is evident by inspection. The optimized branch-and-bound
//! search must agree with it exactly — both on the length and on the
//! witness, which for both searches is the lexicographically smallest vertex
//! sequence among all maximum-length rainbow paths.

// Each integration test target compiles this module separately and not all
// of them call every entry point.
#![allow(dead_code)]

pub mod scan;

use std::collections::HashSet;

use rainbow_core::generators::{gen_gnp_colored, GenSpec};
use rainbow_core::rng::derive_seed;
use rainbow_core::EdgeColoredGraph;

/// One hundred seeded instances with n ≤ 8, spanning sparse to
/// near-complete densities and tight to ample palettes. The fixed grid the
/// optimized search is certified against.
pub fn small_grid() -> Vec<EdgeColoredGraph> {
    (0..100u64)
        .map(|i| {
            let spec = GenSpec {
                n: 5 + (i as usize % 4),
                p: [0.3, 0.5, 0.7, 0.9][(i as usize / 4) % 4],
                num_colors: 3 + i % 6,
                seed: derive_seed(2024, i),
                min_k: None,
            };
            gen_gnp_colored(&spec).expect("grid generation stays within the retry budget")
        })
        .collect()
}

/// Longest rainbow path from any start vertex, by full enumeration.
/// Returns `(length, witness)`.
pub fn naive_max_rainbow_path(g: &EdgeColoredGraph) -> (usize, Vec<usize>) {
    let n = g.num_vertices();
    assert!(n >= 1, "naive search needs at least one vertex");
    let mut best = (0, vec![0]);
    for v in 0..n {
        explore_from(g, v, &mut best);
    }
    best
}

/// Longest rainbow path starting at `v`, by full enumeration.
/// Returns `(length, witness)`.
pub fn naive_max_rainbow_path_from(g: &EdgeColoredGraph, v: usize) -> (usize, Vec<usize>) {
    assert!(v < g.num_vertices(), "start vertex out of range");
    let mut best = (0, vec![v]);
    explore_from(g, v, &mut best);
    best
}

fn explore_from(g: &EdgeColoredGraph, start: usize, best: &mut (usize, Vec<usize>)) {
    let mut on_path = vec![false; g.num_vertices()];
    on_path[start] = true;
    let mut path = vec![start];
    let mut used = HashSet::new();
    extend(g, &mut path, &mut on_path, &mut used, best);
}

fn extend(
    g: &EdgeColoredGraph,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    used: &mut HashSet<usize>,
    best: &mut (usize, Vec<usize>),
) {
    let len = path.len() - 1;
    if len > best.0 || (len == best.0 && path.as_slice() < best.1.as_slice()) {
        *best = (len, path.clone());
    }
    let last = *path.last().expect("path is never empty");
    for v in 0..g.num_vertices() {
        if on_path[v] {
            continue;
        }
        let Some(color) = g.edge_color(last, v) else {
            continue;
        };
        if used.contains(&color) {
            continue;
        }
        path.push(v);
        on_path[v] = true;
        used.insert(color);
        extend(g, path, on_path, used, best);
        used.remove(&color);
        on_path[v] = false;
        path.pop();
    }
}
