//! Fixed-seed sampling of field elements, polynomials and matrices.
//!
//! Every sampled check in the crate draws from a [`Sampler`] so that reports
//! and tests are reproducible from a seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{DensePoly, RatFunc};

/// Default coefficient degree bound for sampled elements.
pub const SAMPLE_DEGREE: usize = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
    p: u32,
}

impl Sampler {
    pub fn new(p: u32, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            p,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// Polynomial of degree at most `max_degree`, possibly zero.
    pub fn poly(&mut self, max_degree: usize) -> DensePoly {
        let deg = self.rng.gen_range(0..=max_degree);
        let coeffs: Vec<i64> = (0..=deg)
            .map(|_| self.rng.gen_range(0..self.p) as i64)
            .collect();
        DensePoly::from_coeffs(self.p, &coeffs)
    }

    pub fn nonzero_poly(&mut self, max_degree: usize) -> DensePoly {
        loop {
            let q = self.poly(max_degree);
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Rational function with numerator and denominator degree at most `max_degree`.
    pub fn ratfunc(&mut self, max_degree: usize) -> RatFunc {
        // Bias towards polynomials and zero so that cancellations get exercised.
        let num = if self.rng.gen_ratio(1, 10) {
            DensePoly::zero(self.p)
        } else {
            self.poly(max_degree)
        };
        let den = if self.rng.gen_ratio(1, 3) {
            DensePoly::one(self.p)
        } else {
            self.nonzero_poly(max_degree)
        };
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    pub fn nonzero_ratfunc(&mut self, max_degree: usize) -> RatFunc {
        loop {
            let r = self.ratfunc(max_degree);
            if !r.is_zero() {
                return r;
            }
        }
    }
}
