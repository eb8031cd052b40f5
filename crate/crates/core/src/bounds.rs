//! The three rainbow-path length bounds tied to the minimum color degree,
//! computed with exact integer ceiling arithmetic.

/// Bound summary for one instance: the minimum color degree `k`, the
/// rainbow path length `t` achieved or known, and the three reference
/// bounds on `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub k: usize,
    pub t: usize,
    /// `ceil((k+1)/2)`: guaranteed from any start vertex.
    pub lemma1_bound: usize,
    /// `ceil(3k/5)`: the proven lower bound on the maximum rainbow path.
    pub theorem_bound: usize,
    /// `ceil(2k/3)`: Saito's conjectured bound, reported but never asserted.
    pub saito_bound: usize,
}

pub fn bounds(k: usize, t: usize) -> BoundReport {
    BoundReport {
        k,
        t,
        lemma1_bound: (k + 1).div_ceil(2),
        theorem_bound: (3 * k).div_ceil(5),
        saito_bound: (2 * k).div_ceil(3),
    }
}
