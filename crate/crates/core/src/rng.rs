//! Seeded pseudo-random numbers for the randomized spot checks.
//!
//! The harness must produce byte-identical reports for a fixed seed, so we
//! use a self-contained splitmix64 generator instead of a platform RNG.

/// Splitmix64 stream. Cheap, deterministic, and good enough for picking
/// random exact test inputs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derive an independent stream for a named sub-task. Checks that run
    /// concurrently each take their own stream so scheduling cannot change
    /// the values they draw.
    pub fn derive(seed: u64, label: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        SplitMix64::new(seed ^ h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Small signed integer in `[-max, max]`.
    pub fn small_int(&mut self, max: u64) -> i64 {
        self.below(2 * max + 1) as i64 - max as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_is_deterministic() {
        let mut a = SplitMix64::derive(42, "suite/check");
        let mut b = SplitMix64::derive(42, "suite/check");
        assert_eq!(a.next_u64(), b.next_u64());
        let mut c = SplitMix64::derive(42, "suite/other");
        assert_ne!(a.next_u64(), c.next_u64());
    }
}
