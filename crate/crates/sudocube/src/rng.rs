//! Seeded counter-based random number generator.
//!
//! Puzzle generation must reproduce byte-identical output for a given seed on
//! every platform, so the generator is fully specified here instead of
//! borrowing an external RNG whose stream could change between versions.
//!
//! Draw `i` (1-based) from seed `s` is
//!
//! ```text
//! out_i = mix64(s ^ (i · 0x9E3779B97F4A7C15))
//! ```
//!
//! where `mix64` is the SplitMix64 finalizer:
//!
//! ```text
//! z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//! z ^= z >> 27; z *= 0x94D049BB133111EB;
//! z ^= z >> 31;
//! ```
//!
//! Bounded draws use `out_i mod bound`; the modulo bias is far below 2⁻³⁰ for
//! every bound this crate uses (all under 2²⁵).

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic generator; the i-th draw depends only on `(seed, i)`.
#[derive(Debug, Clone)]
pub struct CounterRng {
    seed: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> CounterRng {
        CounterRng { seed, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter += 1;
        mix64(self.seed ^ self.counter.wrapping_mul(GAMMA))
    }

    /// Uniform-ish draw in `0..bound`. Panics if `bound` is 0.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below() needs a positive bound");
        self.next_u64() % bound
    }

    /// Fisher-Yates shuffle, swapping from the back.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = CounterRng::new(42);
        let mut b = CounterRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = CounterRng::new(0);
        let mut b = CounterRng::new(1);
        assert_ne!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn frozen_reference_values() {
        // Pinned so any accidental change to the algorithm or constants shows
        // up as a test failure, not as silently different puzzles.
        let mut rng = CounterRng::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        let mut rng = CounterRng::new(123);
        let first = rng.next_u64();
        let second = rng.next_u64();
        assert_ne!(first, second);
        assert_eq!(first, mix64(123 ^ GAMMA));
        assert_eq!(second, mix64(123 ^ GAMMA.wrapping_mul(2)));
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = CounterRng::new(7);
        let mut xs: Vec<u8> = (0..27).collect();
        rng.shuffle(&mut xs);
        let mut sorted = xs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..27).collect::<Vec<u8>>());
    }
}
