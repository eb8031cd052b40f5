//! SplitMix64: the fixed pseudo-random recurrence behind every generated
//! instance.
//!
//! This is Vigna's splitmix64 (the same generator behind Java's
//! `SplittableRandom`): state advances by the golden-gamma constant and
//! each output is a finalizing mix of the state. It is implemented here
//! rather than taken from a crate because recorded sweep CSVs are a byte
//! format; the recurrence below must never change.
//!
//! ```text
//! state += 0x9e3779b97f4a7c15
//! z = state
//! z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//! z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//! output = z ^ (z >> 31)
//! ```
//!
//! Streams split by index: `derive_seed(base, i)` is the `i`-th output of
//! `SplitMix64::new(base)`, computable in O(1), so suites can be generated
//! in parallel by instance index.

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform double in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Unbiased uniform integer in `0..bound` by rejection on the modulo.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The `i`-th output of `SplitMix64::new(base)` without stepping through
/// the stream.
pub fn derive_seed(base: u64, i: u64) -> u64 {
    mix(base.wrapping_add(GOLDEN_GAMMA.wrapping_mul(i + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference outputs of splitmix64 for seed 0 (first three values of
    // the published recurrence).
    #[test]
    fn matches_reference_sequence() {
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220_a839_7b1d_cdaf);
        assert_eq!(r.next_u64(), 0x6e78_9e6a_a1b9_65f4);
        assert_eq!(r.next_u64(), 0x06c4_5d18_8009_454f);
    }

    #[test]
    fn derive_seed_matches_stream() {
        let mut r = SplitMix64::new(42);
        for i in 0..10 {
            assert_eq!(derive_seed(42, i), r.next_u64());
        }
    }

    #[test]
    fn next_below_is_in_range() {
        let mut r = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(r.next_below(6) < 6);
        }
    }

    #[test]
    fn next_f64_is_in_unit_interval() {
        let mut r = SplitMix64::new(99);
        for _ in 0..1000 {
            let x = r.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }
}
