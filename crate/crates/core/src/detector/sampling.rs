//! Seeded sampling of the random coefficients used by both methods.
//!
//! Every run owns a ChaCha8 stream seeded from its run seed, so a report is
//! reproducible from `(seed, runs)` alone on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyalg::{Matrix, Rational};

const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of run `k` (0-based) derived from the base seed. Distinct for
/// distinct `k` since the stride is odd.
pub fn run_seed(base: u64, k: usize) -> u64 {
    base.wrapping_add((k as u64).wrapping_mul(SEED_STRIDE))
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    /// Samples nonzero integers uniformly from `[-bound, bound]`.
    pub fn new(seed: u64, bound: u32) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: i64::from(bound.max(1)),
        }
    }

    pub fn nonzero(&mut self) -> i64 {
        let magnitude = self.rng.gen_range(1..=self.bound);
        if self.rng.gen_bool(0.5) {
            magnitude
        } else {
            -magnitude
        }
    }

    pub fn nonzero_vec(&mut self, len: usize) -> Vec<i64> {
        (0..len).map(|_| self.nonzero()).collect()
    }

    /// Integer in `[-bound, bound]`, zero allowed.
    pub fn small(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    /// Invertible `n x n` integer matrix with entries in `[-bound, bound]`,
    /// resampled until the determinant is nonzero.
    pub fn invertible_matrix(&mut self, n: usize, bound: i64) -> Vec<Vec<i64>> {
        loop {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| self.small(bound)).collect())
                .collect();
            let m = Matrix::<Rational>::from_i64_rows(&rows).expect("square by construction");
            if m.is_invertible() {
                return rows;
            }
        }
    }
}
