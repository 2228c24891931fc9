//! Tropicalization by valuations.
//!
//! A rectangle `(B_{ij}, L)` is sent to the point `X_{ij} = ε^{B_{ij}}`,
//! `t = c ε^L` over [`EpsRational`], pushed through the geometric map, and read
//! back through `Θ^{-1}` and the ε-adic valuation. For subtraction-free maps the
//! result is the tropicalization, independent of the positive constant `c`;
//! factor `j` of a product uses `c = j + 1` so that the `t_j` stay distinct.

use crate::error::{GeomError, Result};
use crate::exactfield::{eps_monomial, EpsRational, Field, Rational, Ring};
use crate::geomcrystal::{
    duality, e_c, prod_e_c, prod_f, prod_gamma, prod_phi_eps, pr, pr_inverse, schutzenberger,
};
use crate::grassmann::{theta, theta_inverse, RationalRect, XPoint};
use crate::rmatrix::{geom_e, geom_r};
use crate::tableaux::KRectangle;

/// `ε^{B_{ij}}`, `t = c ε^L` for a `k`-row rectangle.
pub fn eps_rect(r: &KRectangle, c: i64) -> Result<RationalRect<EpsRational>> {
    if c <= 0 {
        return Err(GeomError::invalid("the constant must be positive"));
    }
    let x = r.b.iter().map(|row| row.iter().map(|&v| eps_monomial(v)).collect()).collect();
    let t = eps_monomial(r.l).mul(&EpsRational::from_rational(Rational::from_int(c)));
    RationalRect::new(r.n, r.k, x, t)
}

/// `Θ(ε^B, c ε^L)`, a point of `X_{n-k}`.
pub fn eps_point(r: &KRectangle, c: i64) -> Result<XPoint<EpsRational>> {
    theta(&eps_rect(r, c)?)
}

fn val(v: &EpsRational) -> Result<i64> {
    if v.leading_coefficient().signum() <= 0 {
        return Err(GeomError::degenerate("tropical engine met a non-positive value"));
    }
    v.val()
}

/// Valuations of `Θ^{-1}` of a point; the result is not validated as a rectangle.
pub fn trop_rect(p: &XPoint<EpsRational>) -> Result<KRectangle> {
    let r = theta_inverse(p)?;
    let b = r.x.iter().map(|row| row.iter().map(val).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    Ok(KRectangle { n: r.n, k: r.k, b, l: val(&r.t)? })
}

fn eps_points(rs: &[KRectangle]) -> Result<Vec<XPoint<EpsRational>>> {
    if rs.is_empty() {
        return Err(GeomError::invalid("empty product"));
    }
    rs.iter().enumerate().map(|(j, r)| eps_point(r, j as i64 + 1)).collect()
}

/// `R̂(a ⊗ b) = b' ⊗ a'`.
pub fn trop_r(a: &KRectangle, b: &KRectangle) -> Result<(KRectangle, KRectangle)> {
    let p = eps_points(&[a.clone(), b.clone()])?;
    let (vp, up) = geom_r(&p[0], &p[1])?;
    Ok((trop_rect(&vp)?, trop_rect(&up)?))
}

/// `Ê(a ⊗ b)`.
pub fn trop_e(a: &KRectangle, b: &KRectangle) -> Result<i64> {
    let p = eps_points(&[a.clone(), b.clone()])?;
    val(&geom_e(&p[0], &p[1])?)
}

/// `γ̂` of a product of rectangles.
pub fn trop_gamma(rs: &[KRectangle]) -> Result<Vec<i64>> {
    prod_gamma(&eps_points(rs)?)?.iter().map(val).collect()
}

/// `(φ̂_i, ε̂_i)` of a product of rectangles.
pub fn trop_phi_eps(rs: &[KRectangle], i: i64) -> Result<(i64, i64)> {
    let (p, e) = prod_phi_eps(&eps_points(rs)?, i)?;
    Ok((val(&p)?, val(&e)?))
}

/// `f̂` of a product of rectangles.
pub fn trop_f(rs: &[KRectangle]) -> Result<i64> {
    val(&prod_f(&eps_points(rs)?)?)
}

/// `ê_i(m, ·)`: the action of `e_i^c` with `c = ε^m`.
pub fn trop_e_i(rs: &[KRectangle], i: i64, m: i64) -> Result<Vec<KRectangle>> {
    let c = eps_monomial(m);
    let p = eps_points(rs)?;
    let out = if p.len() == 1 { vec![e_c(&p[0], i, &c)?] } else { prod_e_c(&p, i, &c)? };
    out.iter().map(trop_rect).collect()
}

pub fn trop_pr(r: &KRectangle) -> Result<KRectangle> {
    trop_rect(&pr(&eps_point(r, 1)?)?)
}

pub fn trop_pr_inverse(r: &KRectangle) -> Result<KRectangle> {
    trop_rect(&pr_inverse(&eps_point(r, 1)?)?)
}

pub fn trop_s(r: &KRectangle) -> Result<KRectangle> {
    trop_rect(&schutzenberger(&eps_point(r, 1)?)?)
}

pub fn trop_d(r: &KRectangle) -> Result<KRectangle> {
    trop_rect(&duality(&eps_point(r, 1)?)?)
}

/// Tropicalization of a rational function given as a closure over the field:
/// every argument `z_j` is replaced by `ε^{a_j}`.
pub fn trop_eval_fn(a: &[i64], f: impl Fn(&[EpsRational]) -> Result<EpsRational>) -> Result<i64> {
    let z: Vec<EpsRational> = a.iter().map(|&v| eps_monomial(v)).collect();
    val(&f(&z)?)
}
