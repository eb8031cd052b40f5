//! The proof-guided solver: greedy extension, rotation, and cycle escape
//! assembled into an iterative search for a rainbow path of length at
//! least `ceil(3k/5)`.
//!
//! The underlying existence argument is a proof by contradiction and does
//! not prescribe an order of moves, so the solver is a best-effort
//! worklist over greedy-maximal paths: rotate each into a rainbow cycle if
//! possible, escape the cycle through an outside vertex, re-extend, and
//! repeat with every new maximal path discovered. If the target bound is
//! reached the search stops; if the worklist drains first, the run ends in
//! a [`StallCertificate`] capturing everything needed to audit (and
//! replay) the failure.

pub mod escape;
pub mod extend;
pub mod rotation;

pub use escape::{build_restricted_subgraph, compute_escape_state, escape_cycle, EscapeState};
pub use extend::{greedy_extend, greedy_extend_back, is_greedy_maximal};
pub use rotation::{
    compute_rotation_sets, rotate_to_cycle, verify_rotation_inequalities, RotationError,
    RotationState,
};

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;

use crate::bounds::{bounds, BoundReport};
use crate::graph::EdgeColoredGraph;
use crate::rainbow::{RainbowCycle, RainbowPath};

/// One of the solver's three moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStep {
    Extend,
    Rotate,
    Escape,
}

impl fmt::Display for SolveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStep::Extend => "extend",
            SolveStep::Rotate => "rotate",
            SolveStep::Escape => "escape",
        })
    }
}

/// One solver iteration for the structured trace. `len_after` equals
/// `len_before` when the move made no progress; for a successful rotate
/// it is the edge count of the produced cycle (`len_before + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRecord {
    pub step: SolveStep,
    pub len_before: usize,
    pub len_after: usize,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.step, self.len_before, self.len_after)
    }
}

/// A fully documented solver failure: the graph, the longest maximal path
/// it got stuck on, that path's rotation bookkeeping, every cycle whose
/// escape was exhausted, and which move ran out first. Re-running
/// [`solve`] on `graph` reproduces the stall.
#[derive(Debug, Clone)]
pub struct StallCertificate {
    pub graph: EdgeColoredGraph,
    pub stuck_path: RainbowPath,
    pub rotation: RotationState,
    pub cycles: Vec<(RainbowCycle, EscapeState)>,
    /// `Rotate` when no stuck path ever produced a cycle, otherwise
    /// `Escape`.
    pub failed_step: SolveStep,
}

/// Result of a [`solve`] run: the best path found, the bound arithmetic
/// for it, the stall certificate if the target was missed, and the move
/// trace.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub path: RainbowPath,
    pub report: BoundReport,
    pub stall: Option<StallCertificate>,
    pub trace: Vec<TraceRecord>,
}

impl SolveOutcome {
    /// True when the returned path meets the `ceil(3k/5)` target.
    pub fn reached_bound(&self) -> bool {
        self.stall.is_none()
    }
}

/// Runs the proof-guided search on `g` until a rainbow path of length at
/// least `ceil(3k/5)` is found or no move makes progress. `k` is always
/// recomputed from the graph, never trusted from a caller.
///
/// Deterministic: the worklist is ordered by descending length then
/// lexicographic vertex sequence, and every move breaks ties by ascending
/// vertex index.
///
/// Panics if `g` has no vertices.
pub fn solve(g: &EdgeColoredGraph) -> SolveOutcome {
    let n = g.num_vertices();
    assert!(n >= 1, "solve needs at least one vertex");
    let k = g.min_color_degree();
    let target = (3 * k).div_ceil(5);

    let mut trace = Vec::new();
    // Largest length first, then lexicographically smallest sequence.
    let mut queue: BTreeSet<(Reverse<usize>, Vec<usize>)> = BTreeSet::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let push = |queue: &mut BTreeSet<(Reverse<usize>, Vec<usize>)>,
                seen: &mut BTreeSet<Vec<usize>>,
                p: &RainbowPath| {
        if seen.insert(p.vertices().to_vec()) {
            queue.insert((Reverse(p.len()), p.vertices().to_vec()));
        }
    };

    for v in 0..n {
        let p = greedy_extend(g, &RainbowPath::singleton(v)).expect("singleton is valid");
        trace.push(TraceRecord {
            step: SolveStep::Extend,
            len_before: 0,
            len_after: p.len(),
        });
        push(&mut queue, &mut seen, &p);
    }

    let mut best: Option<RainbowPath> = None;
    // Cycles whose escape was exhausted, with the length of the path that
    // produced them; harvested for the certificate on a stall.
    let mut dead_cycles: Vec<(usize, RainbowCycle, EscapeState)> = Vec::new();

    while let Some((Reverse(len), verts)) = queue.pop_first() {
        let p = RainbowPath::new(g, verts).expect("queued paths are valid");
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p.clone());
        }
        if best.as_ref().expect("just set").len() >= target {
            break;
        }

        let cycle = rotate_to_cycle(g, &p).expect("queued paths are greedy-maximal");
        trace.push(TraceRecord {
            step: SolveStep::Rotate,
            len_before: len,
            len_after: len + usize::from(cycle.is_some()),
        });
        let Some(cl) = cycle else {
            continue;
        };

        match escape_cycle(g, &cl, k) {
            Some(escaped) => {
                trace.push(TraceRecord {
                    step: SolveStep::Escape,
                    len_before: len,
                    len_after: escaped.len(),
                });
                let grown = greedy_extend(g, &escaped).expect("escape output is valid");
                trace.push(TraceRecord {
                    step: SolveStep::Extend,
                    len_before: escaped.len(),
                    len_after: grown.len(),
                });
                push(&mut queue, &mut seen, &grown);
            }
            None => {
                trace.push(TraceRecord {
                    step: SolveStep::Escape,
                    len_before: len,
                    len_after: len,
                });
                dead_cycles.push((len, cl.clone(), compute_escape_state(g, &cl, k)));
                // The cycle still encodes `len + 1` other maximal path
                // candidates: re-root it at every edge deletion and
                // re-extend. New sequences feed back into the worklist.
                for i in 0..cl.len() {
                    let walk = RainbowPath::new(g, cl.walk_without_edge(i))
                        .expect("cycle walks are valid paths");
                    let grown = greedy_extend(g, &walk).expect("walk is valid");
                    if grown.len() > len {
                        trace.push(TraceRecord {
                            step: SolveStep::Extend,
                            len_before: len,
                            len_after: grown.len(),
                        });
                    }
                    push(&mut queue, &mut seen, &grown);
                }
            }
        }
    }

    let best = best.expect("at least one seed path exists");
    let report = bounds(k, best.len());
    let stall = if best.len() >= target {
        None
    } else {
        let rotation =
            compute_rotation_sets(g, &best).expect("best path is greedy-maximal");
        let cycles: Vec<(RainbowCycle, EscapeState)> = dead_cycles
            .into_iter()
            .map(|(_, cl, st)| (cl, st))
            .collect();
        let failed_step = if cycles.is_empty() {
            SolveStep::Rotate
        } else {
            SolveStep::Escape
        };
        Some(StallCertificate {
            graph: g.clone(),
            stuck_path: best.clone(),
            rotation,
            cycles,
            failed_step,
        })
    };
    SolveOutcome {
        path: best,
        report,
        stall,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_gnp_colored, mono_triangle, rainbow_k4, tight_k4, GenSpec};
    use crate::rainbow::check_rainbow_path;

    #[test]
    fn mono_triangle_meets_its_tiny_bound() {
        let out = solve(&mono_triangle());
        assert_eq!(out.path.len(), 1);
        assert_eq!(out.report.theorem_bound, 1);
        assert!(out.stall.is_none());
    }

    #[test]
    fn rainbow_k4_sails_past_the_bound() {
        let out = solve(&rainbow_k4());
        assert_eq!(out.path.len(), 3);
        assert_eq!(out.report.theorem_bound, 2);
        assert!(out.stall.is_none());
    }

    #[test]
    fn tight_k4_meets_the_bound_with_equality() {
        let out = solve(&tight_k4());
        assert_eq!(out.path.len(), 2);
        assert_eq!(out.report.theorem_bound, 2);
        assert!(out.stall.is_none());
    }

    #[test]
    fn solve_is_deterministic_and_sound() {
        let g = gen_gnp_colored(&GenSpec {
            n: 10,
            p: 0.5,
            num_colors: 6,
            seed: 1234,
            min_k: Some(2),
        })
        .unwrap();
        let a = solve(&g);
        let b = solve(&g);
        assert_eq!(a.path, b.path);
        assert_eq!(a.trace, b.trace);
        assert!(check_rainbow_path(&g, a.path.vertices()).is_ok());
        assert!(a.path.len() >= a.report.theorem_bound || a.stall.is_some());
    }

    #[test]
    fn isolated_vertex_graph_succeeds_at_zero() {
        let g = EdgeColoredGraph::new(2, &[]).unwrap();
        let out = solve(&g);
        assert_eq!(out.path.len(), 0);
        assert_eq!(out.report.theorem_bound, 0);
        assert!(out.stall.is_none());
    }

    #[test]
    fn trace_lines_render_as_csv_triples() {
        let out = solve(&tight_k4());
        assert!(!out.trace.is_empty());
        let line = out.trace[0].to_string();
        assert!(line.starts_with("extend,"));
        assert_eq!(line.split(',').count(), 3);
    }
}
