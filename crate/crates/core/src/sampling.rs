//! Seeded random positive rational points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactfield::Rational;
use crate::grassmann::{theta, RationalRect, XPoint};

/// Default seed when none is configured.
pub const DEFAULT_SEED: u64 = 42;

/// Source of random positive rationals `p/q` with `p, q ∈ {1, …, 20}`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(1..=20);
        let q = self.rng.gen_range(1..=20);
        Rational::new(p, q).expect("non-zero denominator")
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// A rational rectangle with `rows` rows and random positive coordinates.
    pub fn rect(&mut self, n: usize, rows: usize, t: Rational) -> Result<RationalRect<Rational>> {
        let x = (0..rows).map(|_| (0..n - rows).map(|_| self.rational()).collect()).collect();
        RationalRect::new(n, rows, x, t)
    }

    /// A positive point of `X_k`, image of a random rectangle under `Θ_k`.
    pub fn point_with_t(&mut self, n: usize, k: usize, t: Rational) -> Result<XPoint<Rational>> {
        theta(&self.rect(n, n - k, t)?)
    }

    pub fn point(&mut self, n: usize, k: usize) -> Result<XPoint<Rational>> {
        let t = self.rational();
        self.point_with_t(n, k, t)
    }

    /// Pairwise distinct positive rationals.
    pub fn distinct(&mut self, count: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        while out.len() < count {
            let c = self.rational();
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Positive points of `X_{k_1} × ⋯ × X_{k_d}` with distinct `t_j`.
    pub fn points(&mut self, n: usize, profile: &[usize]) -> Result<Vec<XPoint<Rational>>> {
        let ts = self.distinct(profile.len());
        profile.iter().zip(ts).map(|(&k, t)| self.point_with_t(n, k, t)).collect()
    }
}
