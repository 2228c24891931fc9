use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Field, Ring};
use crate::error::Result;

/// Laurent polynomial `Σ coeffs[i] · x^(offset + i)`.
///
/// Normal form: `coeffs` is empty (the zero polynomial, offset 0) or its first and
/// last entries are non-zero.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Laurent<C> {
    offset: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> Laurent<C> {
    pub fn from_coeffs(offset: i64, coeffs: Vec<C>) -> Self {
        let mut p = Laurent { offset, coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    pub fn monomial(c: C, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Lowest exponent with non-zero coefficient.
    pub fn ord(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.offset)
    }

    /// Highest exponent with non-zero coefficient.
    pub fn deg(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> C {
        let i = e - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Iterator over `(exponent, coefficient)` of the non-zero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    pub fn lowest_coeff(&self) -> C {
        self.coeffs.first().cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.offset == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiply by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        Laurent { offset: self.offset + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.offset, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Substitute `x -> -x`.
    pub fn negate_var(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.offset + i as i64).rem_euclid(2) == 1 { c.neg() } else { c.clone() })
            .collect();
        Laurent { offset: self.offset, coeffs }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_coeffs(self.offset, self.coeffs.iter().map(f).collect())
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        if rhs.coeffs.is_empty() {
            return Self::from_coeffs(self.offset, self.coeffs.iter().map(|a| f(a, &C::zero())).collect());
        }
        if self.coeffs.is_empty() {
            return Self::from_coeffs(rhs.offset, rhs.coeffs.iter().map(|b| f(&C::zero(), b)).collect());
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.deg().unwrap().max(rhs.deg().unwrap());
        let z = C::zero();
        let coeffs = (lo..=hi)
            .map(|e| {
                let a = self.get_ref(e).unwrap_or(&z);
                let b = rhs.get_ref(e).unwrap_or(&z);
                f(a, b)
            })
            .collect();
        Self::from_coeffs(lo, coeffs)
    }

    fn get_ref(&self, e: i64) -> Option<&C> {
        let i = e - self.offset;
        if i < 0 {
            None
        } else {
            self.coeffs.get(i as usize)
        }
    }
}

impl<C: Field> Laurent<C> {
    /// Evaluate at `x = v`; negative powers need `v != 0`.
    pub fn eval(&self, v: &C) -> Result<C> {
        if self.coeffs.is_empty() {
            return Ok(C::zero());
        }
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(v).add(c);
        }
        Ok(acc.mul(&v.powi(self.offset)?))
    }
}

impl<C: Field> Laurent<C> {
    /// Exact quotient `self / d`, or `None` if `d` is zero or does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead_inv = d.leading_coeff().inv().ok()?;
        let dl = d.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dl {
            return None;
        }
        let mut q = vec![C::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let c = r[i + dl - 1].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].sub(&c.mul(dj));
            }
            q[i] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.offset - d.offset, q))
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent { offset: 0, coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.sub(b))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(self.offset + rhs.offset, out)
    }
    fn neg(&self) -> Self {
        Laurent { offset: self.offset, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
}

impl<C: Ring + fmt::Debug> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("({c:?})x^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
