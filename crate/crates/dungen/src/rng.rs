//! Deterministic random source.
//!
//! Every random draw in map generation flows through [`SplitMix64`], so a
//! given state reproduces the same maps on every platform. Ranged draws use
//! rejection sampling, never plain modulo reduction, so small bounds stay
//! exactly uniform.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output mix, also used standalone to scramble dataset item
/// indices into decorrelated per-map states.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 generator: 64 bits of state, one add and one mix per output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(state: u64) -> Self {
        Self { state }
    }

    /// Generator for map `item` of a dataset. The index is scrambled by the
    /// golden-ratio constant before mixing, so per-map streams stay
    /// decorrelated and any map can be regenerated alone or in parallel.
    pub fn for_item(master_seed: u64, item: u64) -> Self {
        Self::new(mix64(master_seed ^ item.wrapping_mul(GOLDEN_GAMMA)))
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }
}

/// Uniform integer draws, the only randomness interface generation code uses.
///
/// Implemented by [`SplitMix64`]; tests layer counting wrappers on top to
/// audit how many draws an operation consumes.
pub trait UniformRng {
    /// Uniform value in `[0, bound)`. Always consumes at least one raw
    /// output, even for `bound == 1`.
    fn uniform(&mut self, bound: u64) -> u64;

    /// Uniform value in `[lo, hi]`, both bounds inclusive.
    fn uniform_range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.uniform(hi - lo + 1)
    }
}

impl UniformRng for SplitMix64 {
    fn uniform(&mut self, bound: u64) -> u64 {
        assert!(bound >= 1, "uniform bound must be at least 1");
        // Accept only below the largest multiple of bound: 2^64 mod bound
        // equals ((u64::MAX mod bound) + 1) mod bound.
        let rem = ((u64::MAX % bound) + 1) % bound;
        let cutoff = u64::MAX - rem;
        loop {
            let x = self.next_u64();
            if x <= cutoff {
                return x % bound;
            }
        }
    }
}
