//! Seeded randomness. Every random draw in the crate goes through a
//! [`ChaCha8Rng`] built from an explicit seed, so results are reproducible
//! across runs and platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Scalar;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives the seed of the `index`-th independent draw from a base seed
/// (splitmix64 finalizer over `seed + index`).
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform rational `k / resolution` with `k` uniform in `-resolution..=resolution`.
pub fn symmetric_unit<T: Scalar>(rng: &mut SeededRng, resolution: u64) -> T {
    let m = resolution as i64;
    T::from_ratio(rng.gen_range(-m..=m), m)
}
