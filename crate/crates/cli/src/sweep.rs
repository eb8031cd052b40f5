//! Suite sweeps: run the solver (and optionally the exact oracle) over a
//! generated instance suite and collect one summary row per instance.
//!
//! A sweep is the main experimental loop of this crate. Each row records the
//! instance parameters, the minimum color degree `k`, the constructive path
//! length, the exact optimum where the oracle is affordable, the three lower
//! bounds, and the slack of the two conjectured bounds. Rows render to CSV in
//! a fixed column order so that repeated runs with the same seed are byte
//! identical.

use rainbow_core::bounds::bounds;
use rainbow_core::constructive::solve;
use rainbow_core::generators::{gen_suite, GenError, SuiteInstance};
use rainbow_core::oracle::{max_rainbow_path, max_rainbow_path_from, OracleError};
use rainbow_core::EdgeColoredGraph;
use rayon::prelude::*;

/// Largest vertex count for which a sweep will invoke the exact oracle.
///
/// The branch-and-bound search is exponential in the worst case; twelve
/// vertices keeps a full sweep with `--exact` comfortably inside a few
/// minutes. Larger instances leave the exact columns empty.
pub const EXACT_VERTEX_LIMIT: usize = 12;

/// Column header line of the sweep CSV, without a trailing newline.
pub const CSV_HEADER: &str = "instance_id,seed,n,m,num_colors,k,t_exact,t_constructive,\
bound_theorem,bound_lemma1,bound_saito,slack_saito,slack_kc,stalled,oracle_nodes";

/// One sweep result row; field order matches [`CSV_HEADER`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    /// Position of the instance inside its suite.
    pub instance_id: usize,
    /// Seed the instance was generated from (zero for deterministic families).
    pub seed: u64,
    /// Number of vertices.
    pub n: usize,
    /// Number of edges.
    pub m: usize,
    /// Number of distinct edge colors.
    pub num_colors: usize,
    /// Minimum color degree of the instance.
    pub k: usize,
    /// Exact maximum rainbow path length, when the oracle ran.
    pub t_exact: Option<usize>,
    /// Length of the constructive solver's witness path.
    pub t_constructive: usize,
    /// Guaranteed bound `ceil(3k/5)`.
    pub bound_theorem: usize,
    /// Greedy bound `ceil((k+1)/2)`.
    pub bound_lemma1: usize,
    /// Conjectured bound `ceil(2k/3)`.
    pub bound_saito: usize,
    /// `t - ceil(2k/3)` where `t` is the best length known for the row.
    pub slack_saito: i64,
    /// `t - k` where `t` is the best length known for the row.
    pub slack_kc: i64,
    /// Whether the solver gave up below its target with a stall certificate.
    pub stalled: bool,
    /// Nodes explored by the exact oracle, when it ran.
    pub oracle_nodes: Option<u64>,
}

impl SweepRow {
    /// The strongest length estimate available: exact when present,
    /// otherwise the constructive length.
    pub fn best_t(&self) -> usize {
        self.t_exact.unwrap_or(self.t_constructive)
    }

    /// Renders the row as one CSV line (no trailing newline). Optional
    /// columns render as empty cells.
    pub fn csv_line(&self) -> String {
        let opt_usize = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let opt_u64 = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance_id,
            self.seed,
            self.n,
            self.m,
            self.num_colors,
            self.k,
            opt_usize(self.t_exact),
            self.t_constructive,
            self.bound_theorem,
            self.bound_lemma1,
            self.bound_saito,
            self.slack_saito,
            self.slack_kc,
            u8::from(self.stalled),
            opt_u64(self.oracle_nodes),
        )
    }

    /// Hard failures recorded in this row. Slack columns are observational
    /// and never flagged; only proved guarantees count as violations.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(exact) = self.t_exact {
            if exact < self.bound_theorem {
                out.push(format!(
                    "instance {}: exact t = {} below the guaranteed bound {}",
                    self.instance_id, exact, self.bound_theorem
                ));
            }
            if exact < self.t_constructive {
                out.push(format!(
                    "instance {}: exact t = {} shorter than the constructive length {}",
                    self.instance_id, exact, self.t_constructive
                ));
            }
        }
        if self.stalled {
            out.push(format!(
                "instance {}: solver stalled below its target length",
                self.instance_id
            ));
        }
        out
    }
}

/// Builds the sweep row for a single suite instance.
///
/// The constructive solver always runs; the exact oracle additionally runs
/// when `exact` is set and the instance has at most [`EXACT_VERTEX_LIMIT`]
/// vertices.
pub fn row_for_instance(inst: &SuiteInstance, exact: bool) -> SweepRow {
    let g = &inst.graph;
    let outcome = solve(g);
    let k = outcome.report.k;
    let (t_exact, oracle_nodes) = if exact && g.num_vertices() <= EXACT_VERTEX_LIMIT {
        let result = max_rainbow_path(g)
            .expect("suite instances stay within the oracle's default limits");
        (Some(result.t()), Some(result.nodes_explored))
    } else {
        (None, None)
    };
    let best_t = t_exact.unwrap_or(outcome.path.len());
    let report = bounds(k, best_t);
    SweepRow {
        instance_id: inst.index,
        seed: inst.seed,
        n: g.num_vertices(),
        m: g.num_edges(),
        num_colors: g.num_colors(),
        k,
        t_exact,
        t_constructive: outcome.path.len(),
        bound_theorem: report.theorem_bound,
        bound_lemma1: report.lemma1_bound,
        bound_saito: report.saito_bound,
        slack_saito: best_t as i64 - report.saito_bound as i64,
        slack_kc: best_t as i64 - k as i64,
        stalled: outcome.stall.is_some(),
        oracle_nodes,
    }
}

/// Sweeps an already-generated suite, in parallel, preserving suite order.
pub fn rows_for_suite(suite: &[SuiteInstance], exact: bool) -> Vec<SweepRow> {
    suite
        .par_iter()
        .map(|inst| row_for_instance(inst, exact))
        .collect()
}

/// Generates the named profile and sweeps it.
pub fn sweep_profile(profile: &str, base_seed: u64, exact: bool) -> Result<Vec<SweepRow>, GenError> {
    let suite = gen_suite(profile, base_seed)?;
    Ok(rows_for_suite(&suite, exact))
}

/// Renders header plus rows as a CSV document with a trailing newline.
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

/// All violations across a sweep, in row order.
pub fn collect_violations(rows: &[SweepRow]) -> Vec<String> {
    rows.iter().flat_map(SweepRow::violations).collect()
}

/// Smallest `slack_saito` and `slack_kc` over the sweep, if any rows exist.
pub fn min_slacks(rows: &[SweepRow]) -> Option<(i64, i64)> {
    let saito = rows.iter().map(|r| r.slack_saito).min()?;
    let kc = rows.iter().map(|r| r.slack_kc).min()?;
    Some((saito, kc))
}

/// Per-vertex audit of the greedy guarantee: from every start vertex the
/// exact oracle must find a rainbow path of length at least
/// `ceil((k + 1) / 2)`. Returns one message per failing vertex.
///
/// The guarantee presumes every vertex sees at least one color. When
/// `k == 0` some vertex has no edges, the promise is vacuous, and the audit
/// passes by definition.
pub fn per_vertex_violations(g: &EdgeColoredGraph) -> Result<Vec<String>, OracleError> {
    let k = g.min_color_degree();
    if k == 0 {
        return Ok(Vec::new());
    }
    let want = (k + 1).div_ceil(2);
    let mut out = Vec::new();
    for v in 0..g.num_vertices() {
        let got = max_rainbow_path_from(g, v)?.t();
        if got < want {
            out.push(format!(
                "vertex {v}: best rainbow path from it has length {got} < {want}"
            ));
        }
    }
    Ok(out)
}
