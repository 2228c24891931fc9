use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Field, Laurent, Rational, Ring};
use crate::error::{GeomError, Result};

/// Rational function in a formal infinitesimal ε > 0 with rational coefficients.
///
/// Canonical form: `num / den` with `den` an ordinary polynomial whose constant
/// term is non-zero and whose leading coefficient is 1, and `gcd(num, den) = 1`.
/// All powers of ε therefore live in `num`, and equal values have identical
/// representations.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsRational {
    num: Laurent<Rational>,
    den: Laurent<Rational>,
}

/// `ε^a`.
pub fn eps_monomial(a: i64) -> EpsRational {
    EpsRational { num: Laurent::monomial(Rational::one(), a), den: Laurent::one() }
}

/// Valuation `ord(num) - ord(den)`; zero has no valuation.
pub fn val(f: &EpsRational) -> Result<i64> {
    f.val()
}

impl EpsRational {
    pub fn from_rational(c: Rational) -> Self {
        EpsRational { num: Laurent::constant(c), den: Laurent::one() }
    }

    pub fn from_laurent(num: Laurent<Rational>) -> Self {
        EpsRational { num, den: Laurent::one() }
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn from_parts(num: Laurent<Rational>, den: Laurent<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(GeomError::degenerate("zero denominator"));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = den.offset();
        let mut n = num.coeffs().to_vec();
        let mut d = den.coeffs().to_vec();
        let noff = num.offset() - shift;
        let g = poly_gcd(&n, &d);
        if g.len() > 1 {
            n = poly_div_monic(&n, &g);
            d = poly_div_monic(&d, &g);
        }
        let lc = d.last().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv()?;
            n.iter_mut().for_each(|c| *c = c.mul(&inv));
            d.iter_mut().for_each(|c| *c = c.mul(&inv));
        }
        Ok(EpsRational { num: Laurent::from_coeffs(noff, n), den: Laurent::from_coeffs(0, d) })
    }

    pub fn numerator(&self) -> &Laurent<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent<Rational> {
        &self.den
    }

    pub fn val(&self) -> Result<i64> {
        self.num.ord().ok_or_else(|| GeomError::degenerate("valuation of zero"))
    }

    /// Coefficient of the lowest power of ε in the expansion at ε = 0.
    pub fn leading_coefficient(&self) -> Rational {
        if self.num.is_zero() {
            return Rational::zero();
        }
        self.num.lowest_coeff().mul(&self.den.lowest_coeff().inv().expect("canonical den"))
    }

    /// Evaluate at a concrete non-zero rational ε.
    pub fn eval(&self, e: &Rational) -> Result<Rational> {
        self.num.eval(e)?.div(&self.den.eval(e)?)
    }

    fn den_is_one(&self) -> bool {
        self.den.coeffs().len() == 1
    }
}

impl Ring for EpsRational {
    fn zero() -> Self {
        EpsRational { num: Laurent::zero(), den: Laurent::one() }
    }
    fn one() -> Self {
        EpsRational { num: Laurent::one(), den: Laurent::one() }
    }
    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den_is_one() && rhs.den_is_one() {
            return Self::from_laurent(self.num.add(&rhs.num));
        }
        if self.den_is_one() || rhs.den_is_one() {
            // a + c/d = (a d + c)/d is already reduced
            let (a, b) = if self.den_is_one() { (self, rhs) } else { (rhs, self) };
            let num = a.num.mul(&b.den).add(&b.num);
            return EpsRational { num, den: b.den.clone() };
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            return Self::from_parts(num, self.den.clone()).expect("non-zero den");
        }
        let g = poly_gcd(self.den.coeffs(), rhs.den.coeffs());
        if g.len() == 1 {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return EpsRational { num, den: self.den.mul(&rhs.den) };
        }
        let b1 = Laurent::from_coeffs(0, poly_div_monic(self.den.coeffs(), &g));
        let d1 = Laurent::from_coeffs(0, poly_div_monic(rhs.den.coeffs(), &g));
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        Self::from_parts(num, b1.mul(&rhs.den)).expect("non-zero den")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den_is_one() && rhs.den_is_one() {
            return Self::from_laurent(self.num.mul(&rhs.num));
        }
        let (mut a, mut bd) = (self.num.clone(), self.den.clone());
        let (mut c, mut dd) = (rhs.num.clone(), rhs.den.clone());
        cancel(&mut a, &mut dd);
        cancel(&mut c, &mut bd);
        EpsRational { num: a.mul(&c), den: bd.mul(&dd) }
    }
    fn neg(&self) -> Self {
        EpsRational { num: self.num.neg(), den: self.den.clone() }
    }
    fn is_one(&self) -> bool {
        self.den_is_one() && self.num.is_constant() && self.num.lowest_coeff().is_one()
    }
}

/// Remove the common factor of a numerator and a canonical (monic) denominator.
fn cancel(num: &mut Laurent<Rational>, den: &mut Laurent<Rational>) {
    if den.coeffs().len() == 1 || num.coeffs().len() == 1 {
        return;
    }
    let g = poly_gcd(num.coeffs(), den.coeffs());
    if g.len() > 1 {
        *num = Laurent::from_coeffs(num.offset(), poly_div_monic(num.coeffs(), &g));
        *den = Laurent::from_coeffs(0, poly_div_monic(den.coeffs(), &g));
    }
}

impl Field for EpsRational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(GeomError::degenerate("division by zero"));
        }
        let lc = self.num.leading_coeff().inv()?;
        let num = self.den.shift(-self.num.offset()).scale(&lc);
        let den = Laurent::from_coeffs(0, self.num.coeffs().to_vec()).scale(&lc);
        Ok(EpsRational { num, den })
    }
    fn signum(&self) -> i32 {
        self.leading_coefficient().signum()
    }
}

impl From<Rational> for EpsRational {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl fmt::Debug for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "[{:?}]", self.num)
        } else {
            write!(f, "[{:?}] / [{:?}]", self.num, self.den)
        }
    }
}

fn to_primitive(p: &[Rational]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        p.iter_mut().for_each(|c| *c = &*c / &g);
    }
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter_mut().for_each(|c| *c = -&*c);
    }
    p
}

/// Primitive pseudo-remainder sequence over the integers.
fn int_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let la = a.last().unwrap().clone();
            let shift = a.len() - b.len();
            for c in a.iter_mut() {
                *c *= &lb;
            }
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &la * c;
            }
            a = make_primitive(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Monic gcd of two polynomials given by ascending coefficient vectors.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.len() <= 1 || b.len() <= 1 {
        return vec![Rational::one()];
    }
    let g = int_gcd(to_primitive(a), to_primitive(b));
    let lc = g.last().unwrap().clone();
    g.into_iter().map(|c| Rational(BigRational::new(c, lc.clone()))).collect()
}

/// Exact quotient `a / g` for monic `g` dividing `a`.
fn poly_div_monic(a: &[Rational], g: &[Rational]) -> Vec<Rational> {
    let dg = g.len() - 1;
    if a.len() <= dg {
        return vec![];
    }
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() - dg];
    for i in (0..q.len()).rev() {
        let c = r[i + dg].clone();
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate() {
            r[i + j] = r[i + j].sub(&c.mul(gj));
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}
