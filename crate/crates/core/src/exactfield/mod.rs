//! Exact scalar fields.
//!
//! [`Rational`] is arbitrary precision, [`EpsRational`] is the field of rational
//! functions in a formal positive infinitesimal ε, and [`Laurent`] is a sparse-free
//! dense Laurent polynomial over any ring.

mod eps;
mod laurent;
mod rational;

use std::fmt;

use crate::error::Result;

pub use eps::{eps_monomial, val, EpsRational};
pub use laurent::Laurent;
pub use rational::Rational;

/// Commutative ring with unit. Arithmetic goes through `&self` so generic code
/// does not have to clone operands.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `(-1)^e`.
    fn sign_pow(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

/// Ordered field. Both fields in this crate are ordered: the rationals, and
/// rational functions in ε with ε a positive infinitesimal.
pub trait Field: Ring {
    /// Multiplicative inverse; zero yields `DegenerateInput`.
    fn inv(&self) -> Result<Self>;

    /// Sign in the field ordering: -1, 0 or 1.
    fn signum(&self) -> i32;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    fn is_positive(&self) -> bool {
        self.signum() > 0
    }
}
