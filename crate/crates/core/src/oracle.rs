//! Exact maximum rainbow path and rainbow-cycle search.
//!
//! Depth-first search over (endpoint, visited-vertex set, used-color set)
//! with branch-and-bound pruning: a branch is cut when its length plus the
//! number of still-usable colors (or unvisited vertices) cannot strictly
//! beat the incumbent. Expansion is in ascending vertex order and the
//! incumbent is replaced only on strict improvement, so the witness is the
//! lexicographically smallest maximum-length path and every run is
//! deterministic.
//!
//! The problem is NP-hard in general; this is a desk-scale ground truth,
//! guarded by a vertex limit and a search-node budget rather than left to
//! run unbounded.

use crate::graph::EdgeColoredGraph;
use crate::rainbow::{RainbowCycle, RainbowPath};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("oracle needs at least one vertex")]
    EmptyGraph,
    #[error("instance too large for exact search: n={n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("instance has {count} colors, exact search supports at most {limit}")]
    TooManyColors { count: usize, limit: usize },
    #[error("search-node budget {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("rainbow cycles need length >= 3, got {0}")]
    CycleLengthTooSmall(usize),
}

/// Guard rails for one exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Refuse instances with more vertices than this.
    pub max_vertices: usize,
    /// Abort after this many search nodes.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_vertices: 14,
            node_budget: 100_000_000,
        }
    }
}

/// Hard caps of the bitmask representation, independent of [`SearchLimits`].
const MASK_VERTEX_LIMIT: usize = 64;
const MASK_COLOR_LIMIT: usize = 128;

/// Outcome of an exact search: the maximum length `t`, one witness path
/// attaining it, and the search effort spent proving optimality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub witness: RainbowPath,
    pub nodes_explored: u64,
}

impl OracleResult {
    /// Maximum rainbow path length.
    pub fn t(&self) -> usize {
        self.witness.len()
    }
}

/// Exact maximum rainbow path length over the whole graph, with default
/// limits.
pub fn max_rainbow_path(g: &EdgeColoredGraph) -> Result<OracleResult, OracleError> {
    max_rainbow_path_with_limits(g, SearchLimits::default())
}

pub fn max_rainbow_path_with_limits(
    g: &EdgeColoredGraph,
    limits: SearchLimits,
) -> Result<OracleResult, OracleError> {
    check_instance(g, &limits)?;
    run_search(g, 0..g.num_vertices(), limits)
}

/// Exact maximum over rainbow paths whose first vertex is `x`.
pub fn max_rainbow_path_from(
    g: &EdgeColoredGraph,
    x: usize,
) -> Result<OracleResult, OracleError> {
    max_rainbow_path_from_with_limits(g, x, SearchLimits::default())
}

pub fn max_rainbow_path_from_with_limits(
    g: &EdgeColoredGraph,
    x: usize,
    limits: SearchLimits,
) -> Result<OracleResult, OracleError> {
    check_instance(g, &limits)?;
    if x >= g.num_vertices() {
        return Err(OracleError::VertexOutOfRange {
            vertex: x,
            n: g.num_vertices(),
        });
    }
    run_search(g, x..x + 1, limits)
}

/// Exhaustive search for a rainbow cycle on exactly `len` vertices;
/// `None` only if no such cycle exists.
pub fn find_rainbow_cycle_of_length(
    g: &EdgeColoredGraph,
    len: usize,
) -> Result<Option<RainbowCycle>, OracleError> {
    find_rainbow_cycle_of_length_with_limits(g, len, SearchLimits::default())
}

pub fn find_rainbow_cycle_of_length_with_limits(
    g: &EdgeColoredGraph,
    len: usize,
    limits: SearchLimits,
) -> Result<Option<RainbowCycle>, OracleError> {
    if len < 3 {
        return Err(OracleError::CycleLengthTooSmall(len));
    }
    check_instance(g, &limits)?;
    if len > g.num_vertices() {
        return Ok(None);
    }
    let mut search = CycleSearch {
        g,
        target: len,
        budget: limits.node_budget,
        nodes: 0,
        path: Vec::with_capacity(len),
        found: None,
    };
    // Anchor each candidate cycle at its smallest vertex: every later
    // vertex must exceed the anchor, so each vertex set is tried once.
    for anchor in 0..g.num_vertices() {
        search.path.clear();
        search.path.push(anchor);
        search.dfs(anchor, anchor, 1u64 << anchor, 0u128)?;
        if search.found.is_some() {
            break;
        }
    }
    Ok(search.found.map(|vertices| {
        RainbowCycle::new(g, vertices).expect("search emits valid rainbow cycles")
    }))
}

fn check_instance(g: &EdgeColoredGraph, limits: &SearchLimits) -> Result<(), OracleError> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let limit = limits.max_vertices.min(MASK_VERTEX_LIMIT);
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    if g.num_colors() > MASK_COLOR_LIMIT {
        return Err(OracleError::TooManyColors {
            count: g.num_colors(),
            limit: MASK_COLOR_LIMIT,
        });
    }
    Ok(())
}

fn run_search(
    g: &EdgeColoredGraph,
    starts: std::ops::Range<usize>,
    limits: SearchLimits,
) -> Result<OracleResult, OracleError> {
    let mut search = PathSearch {
        g,
        budget: limits.node_budget,
        nodes: 0,
        best: vec![starts.start],
        path: Vec::with_capacity(g.num_vertices()),
    };
    for start in starts {
        search.path.clear();
        search.path.push(start);
        search.dfs(start, 1u64 << start, 0u128)?;
    }
    let witness =
        RainbowPath::new(g, search.best).expect("search emits valid rainbow paths");
    Ok(OracleResult {
        witness,
        nodes_explored: search.nodes,
    })
}

struct PathSearch<'a> {
    g: &'a EdgeColoredGraph,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn dfs(&mut self, current: usize, visited: u64, used: u128) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExhausted {
                budget: self.budget,
            });
        }
        let len = self.path.len() - 1;
        if len + 1 > self.best.len() {
            self.best = self.path.clone();
        }
        let unvisited = self.g.num_vertices() - visited.count_ones() as usize;
        let unused_colors = self.g.num_colors() - used.count_ones() as usize;
        // Cannot strictly beat the incumbent from here.
        if len + unvisited.min(unused_colors) < self.best.len() {
            return Ok(());
        }
        for &(nb, color) in self.g.neighbors(current) {
            if visited & (1 << nb) == 0 && used & (1 << color) == 0 {
                self.path.push(nb);
                self.dfs(nb, visited | (1 << nb), used | (1 << color))?;
                self.path.pop();
            }
        }
        Ok(())
    }
}

struct CycleSearch<'a> {
    g: &'a EdgeColoredGraph,
    target: usize,
    budget: u64,
    nodes: u64,
    path: Vec<usize>,
    found: Option<Vec<usize>>,
}

impl CycleSearch<'_> {
    fn dfs(
        &mut self,
        anchor: usize,
        current: usize,
        visited: u64,
        used: u128,
    ) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExhausted {
                budget: self.budget,
            });
        }
        if self.path.len() == self.target {
            if let Some(color) = self.g.edge_color(current, anchor) {
                if used & (1 << color) == 0 {
                    self.found = Some(self.path.clone());
                }
            }
            return Ok(());
        }
        for &(nb, color) in self.g.neighbors(current) {
            if nb > anchor && visited & (1 << nb) == 0 && used & (1 << color) == 0 {
                self.path.push(nb);
                self.dfs(anchor, nb, visited | (1 << nb), used | (1 << color))?;
                self.path.pop();
                if self.found.is_some() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_gnp_colored, mono_triangle, rainbow_k4, tight_k4, GenSpec};
    use crate::rainbow::check_rainbow_path;

    #[test]
    fn mono_triangle_has_t_one() {
        let res = max_rainbow_path(&mono_triangle()).unwrap();
        assert_eq!(res.t(), 1);
    }

    #[test]
    fn rainbow_k4_has_hamiltonian_rainbow_path() {
        let res = max_rainbow_path(&rainbow_k4()).unwrap();
        assert_eq!(res.t(), 3);
    }

    #[test]
    fn proper_k4_caps_at_two() {
        // cross-checked against the naive enumerator in tests/oracle_equivalence.rs
        let res = max_rainbow_path(&tight_k4()).unwrap();
        assert_eq!(res.t(), 2);
    }

    #[test]
    fn from_vertex_examples() {
        assert_eq!(max_rainbow_path_from(&mono_triangle(), 0).unwrap().t(), 1);
        assert_eq!(max_rainbow_path_from(&rainbow_k4(), 1).unwrap().t(), 3);
        let res = max_rainbow_path_from(&tight_k4(), 0).unwrap();
        assert_eq!(res.t(), 2);
        assert_eq!(res.witness.first(), 0);
        assert!(max_rainbow_path_from(&tight_k4(), 9).is_err());
    }

    #[test]
    fn witness_is_valid_and_deterministic() {
        let g = gen_gnp_colored(&GenSpec {
            n: 9,
            p: 0.6,
            num_colors: 5,
            seed: 31,
            min_k: None,
        })
        .unwrap();
        let a = max_rainbow_path(&g).unwrap();
        let b = max_rainbow_path(&g).unwrap();
        assert_eq!(a, b);
        assert!(check_rainbow_path(&g, a.witness.vertices()).is_ok());
        assert_eq!(a.witness.len(), a.t());
    }

    #[test]
    fn cycle_examples() {
        let cl = find_rainbow_cycle_of_length(&tight_k4(), 3).unwrap().unwrap();
        assert_eq!(cl.len(), 3);
        assert!(find_rainbow_cycle_of_length(&mono_triangle(), 3)
            .unwrap()
            .is_none());
        let cl = find_rainbow_cycle_of_length(&rainbow_k4(), 4).unwrap().unwrap();
        assert_eq!(cl.vertices(), &[0, 1, 2, 3]);
        assert!(matches!(
            find_rainbow_cycle_of_length(&tight_k4(), 2),
            Err(OracleError::CycleLengthTooSmall(2))
        ));
        assert!(find_rainbow_cycle_of_length(&tight_k4(), 5).unwrap().is_none());
    }

    #[test]
    fn size_guard_rejects_large_instances() {
        let g = EdgeColoredGraph::new(15, &[(0, 1, 1)]).unwrap();
        assert!(matches!(
            max_rainbow_path(&g),
            Err(OracleError::TooLarge { n: 15, limit: 14 })
        ));
        let res = max_rainbow_path_with_limits(
            &g,
            SearchLimits {
                max_vertices: 20,
                node_budget: 1_000_000,
            },
        )
        .unwrap();
        assert_eq!(res.t(), 1);
    }

    #[test]
    fn budget_guard_fires() {
        let g = gen_proper_k8();
        let err = max_rainbow_path_with_limits(
            &g,
            SearchLimits {
                max_vertices: 14,
                node_budget: 10,
            },
        )
        .unwrap_err();
        assert_eq!(err, OracleError::BudgetExhausted { budget: 10 });
    }

    #[test]
    fn edgeless_graph_has_singleton_witness() {
        let g = EdgeColoredGraph::new(3, &[]).unwrap();
        let res = max_rainbow_path(&g).unwrap();
        assert_eq!(res.t(), 0);
        assert_eq!(res.witness.vertices(), &[0]);
    }

    fn gen_proper_k8() -> EdgeColoredGraph {
        crate::generators::gen_proper_complete(8).unwrap()
    }
}
