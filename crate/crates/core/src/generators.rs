//! Deterministic, seeded construction of edge-colored instances: G(n,p)
//! with uniform random colors, round-robin proper colorings of complete
//! graphs, fixed small examples, and the named suites the harness sweeps.

use crate::graph::EdgeColoredGraph;
use crate::rng::{derive_seed, SplitMix64};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("retry budget {budget} exhausted generating n={n} p={p_permille}promille colors={num_colors} seed={seed} min_k={min_k}")]
    RetryBudgetExhausted {
        budget: u32,
        n: usize,
        p_permille: u32,
        num_colors: u64,
        seed: u64,
        min_k: usize,
    },
    #[error("proper complete coloring needs even n, got {0}")]
    OddVertexCount(usize),
    #[error("unknown suite profile {0:?}")]
    UnknownProfile(String),
}

/// Parameters for one seeded G(n,p) instance with uniformly colored edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    /// Edge probability in `[0, 1]`.
    pub p: f64,
    /// Color palette size; colors are drawn uniformly from `0..num_colors`.
    pub num_colors: u64,
    pub seed: u64,
    /// When set, rejection-sample until `min_color_degree >= min_k`.
    pub min_k: Option<usize>,
}

const RETRY_BUDGET: u32 = 10_000;

/// Seeded G(n,p) with uniform edge colors. Pairs `(u,v)`, `u < v`, are
/// visited in lexicographic order; each is included with probability `p`
/// and colored uniformly. Attempt `i` runs on the sub-seed `derive_seed(seed, i)`,
/// so the output is a pure function of the spec.
pub fn gen_gnp_colored(spec: &GenSpec) -> Result<EdgeColoredGraph, GenError> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(GenError::InvalidSpec(format!(
            "edge probability {} outside [0,1]",
            spec.p
        )));
    }
    if spec.num_colors == 0 {
        return Err(GenError::InvalidSpec("num_colors must be >= 1".into()));
    }
    if spec.n == 0 {
        return Err(GenError::InvalidSpec("n must be >= 1".into()));
    }
    let attempts = if spec.min_k.is_some() { RETRY_BUDGET } else { 1 };
    for attempt in 0..attempts {
        let mut rng = SplitMix64::new(derive_seed(spec.seed, attempt as u64));
        let mut edges = Vec::new();
        for u in 0..spec.n {
            for v in (u + 1)..spec.n {
                if rng.next_f64() < spec.p {
                    let color = rng.next_below(spec.num_colors);
                    edges.push((u, v, color));
                }
            }
        }
        let g = EdgeColoredGraph::new(spec.n, &edges).expect("generated edges are valid");
        match spec.min_k {
            Some(min_k) if g.min_color_degree() < min_k => continue,
            _ => return Ok(g),
        }
    }
    Err(GenError::RetryBudgetExhausted {
        budget: RETRY_BUDGET,
        n: spec.n,
        p_permille: (spec.p * 1000.0) as u32,
        num_colors: spec.num_colors,
        seed: spec.seed,
        min_k: spec.min_k.unwrap_or(0),
    })
}

/// Complete graph `K_n` (n even) properly edge-colored by the round-robin
/// 1-factorization: round `r` pairs the pivot `n-1` with `r` and wraps the
/// remaining vertices around the circle. Every vertex then has color
/// degree exactly `n-1`.
pub fn gen_proper_complete(n: usize) -> Result<EdgeColoredGraph, GenError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(GenError::OddVertexCount(n));
    }
    let m = n - 1;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for round in 0..m {
        edges.push((n - 1, round, round as u64));
        for i in 1..n / 2 {
            let a = (round + i) % m;
            let b = (round + m - i) % m;
            edges.push((a, b, round as u64));
        }
    }
    Ok(EdgeColoredGraph::new(n, &edges).expect("round-robin pairing is simple"))
}

/// The proper-colored K4: minimum color degree 3 whose maximum rainbow
/// path has length exactly 2, meeting the ceil(3k/5) bound with equality.
pub fn tight_k4() -> EdgeColoredGraph {
    EdgeColoredGraph::new(
        4,
        &[
            (0, 1, 1),
            (2, 3, 1),
            (0, 2, 2),
            (1, 3, 2),
            (0, 3, 3),
            (1, 2, 3),
        ],
    )
    .expect("fixed instance")
}

/// Monochromatic triangle: every edge colored 1.
pub fn mono_triangle() -> EdgeColoredGraph {
    EdgeColoredGraph::new(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).expect("fixed instance")
}

/// K4 with six pairwise-distinct colors; every Hamiltonian path is rainbow.
pub fn rainbow_k4() -> EdgeColoredGraph {
    EdgeColoredGraph::new(
        4,
        &[
            (0, 1, 0),
            (0, 2, 1),
            (0, 3, 2),
            (1, 2, 3),
            (1, 3, 4),
            (2, 3, 5),
        ],
    )
    .expect("fixed instance")
}

/// One instance of a named suite, carrying the parameters that produced it
/// for reporting.
#[derive(Debug, Clone)]
pub struct SuiteInstance {
    pub index: usize,
    /// Seed of the instance's own stream (0 for the deterministic
    /// proper-family constructions).
    pub seed: u64,
    pub graph: EdgeColoredGraph,
}

/// Named suite profiles.
///
/// * `"small-exhaustive"`: 800 instances. For every `n` in 5..=8 and `p` in
///   {0.4, 0.7}, seeds 0..=99; the palette cycles with the seed as
///   `3 + seed % 4`, covering 3..=6 colors. Ignores `base_seed`.
/// * `"sweep-default"`: 1000 instances, `n = 5 + i % 8` (5..=12), `p`
///   cycling {0.4, 0.55, 0.7}, palette cycling {3, 4, 5, 6, 7}; instance
///   `i` is seeded with `derive_seed(base_seed, i)`.
/// * `"proper-family"`: round-robin proper `K_n` for even `n` in 4..=12.
pub fn gen_suite(profile: &str, base_seed: u64) -> Result<Vec<SuiteInstance>, GenError> {
    match profile {
        "small-exhaustive" => {
            let mut out = Vec::with_capacity(800);
            for n in 5..=8 {
                for &p in &[0.4, 0.7] {
                    for seed in 0..100u64 {
                        let spec = GenSpec {
                            n,
                            p,
                            num_colors: 3 + seed % 4,
                            seed,
                            min_k: None,
                        };
                        out.push(SuiteInstance {
                            index: out.len(),
                            seed,
                            graph: gen_gnp_colored(&spec)?,
                        });
                    }
                }
            }
            Ok(out)
        }
        "sweep-default" => {
            const PS: [f64; 3] = [0.4, 0.55, 0.7];
            const PALETTES: [u64; 5] = [3, 4, 5, 6, 7];
            let mut out = Vec::with_capacity(1000);
            for i in 0..1000usize {
                let seed = derive_seed(base_seed, i as u64);
                let spec = GenSpec {
                    n: 5 + i % 8,
                    p: PS[(i / 8) % PS.len()],
                    num_colors: PALETTES[(i / 24) % PALETTES.len()],
                    seed,
                    min_k: None,
                };
                out.push(SuiteInstance {
                    index: i,
                    seed,
                    graph: gen_gnp_colored(&spec)?,
                });
            }
            Ok(out)
        }
        "proper-family" => {
            let mut out = Vec::new();
            for n in [4, 6, 8, 10, 12] {
                out.push(SuiteInstance {
                    index: out.len(),
                    seed: 0,
                    graph: gen_proper_complete(n)?,
                });
            }
            Ok(out)
        }
        other => Err(GenError::UnknownProfile(other.to_string())),
    }
}

/// The known profile names accepted by [`gen_suite`].
pub const PROFILES: [&str; 3] = ["small-exhaustive", "sweep-default", "proper-family"];
