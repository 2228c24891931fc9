//! Decorated geometric crystal structure on `X_k = Gr(k,n) × F^×` and on
//! products, and the symmetries `PR`, `S`, `μ`, `D`.

use crate::error::{GeomError, Result};
use crate::exactfield::Field;
use crate::grassmann::{interval, w0, XPoint};
use crate::loopgroup::{decoration_formula, fl, g_eval, unfold_entry, x_scalar, LoopMatrix};
use crate::matrix::Mat;

fn union(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut s = a.to_vec();
    s.extend_from_slice(b);
    s
}

fn residue(n: usize, i: i64) -> i64 {
    i.rem_euclid(n as i64)
}

fn ratio<F: Field>(num: F, den: F, what: &str) -> Result<F> {
    num.div(&den).map_err(|_| GeomError::degenerate(format!("{what}: vanishing denominator")))
}

/// `γ(N|t)_i = P_{[i-k+1,i]} / P_{[i-k,i-1]}`, times `t` when `i > k`.
pub fn gamma<F: Field>(x: &XPoint<F>) -> Result<Vec<F>> {
    let k = x.k() as i64;
    (1..=x.n() as i64)
        .map(|i| {
            let v = ratio(x.plucker(&interval(i - k + 1, i)), x.plucker(&interval(i - k, i - 1)), "gamma")?;
            Ok(if i > k { v.mul(&x.t) } else { v })
        })
        .collect()
}

/// `φ_i = t^{-δ_{i,0}} P_{[i-k+1,i-1] ∪ {i+1}} / P_{[i-k+1,i]}`.
pub fn phi<F: Field>(x: &XPoint<F>, i: i64) -> Result<F> {
    let (n, k) = (x.n(), x.k() as i64);
    let i = residue(n, i);
    let v = ratio(
        x.plucker(&union(&interval(i - k + 1, i - 1), &[i + 1])),
        x.plucker(&interval(i - k + 1, i)),
        "phi",
    )?;
    if i == 0 {
        v.div(&x.t)
    } else {
        Ok(v)
    }
}

/// `ε_i = t^{-δ_{i,k}} P_{[i-k+1,i-1] ∪ {i+1}} P_{[i-k+1,i]} / (P_{[i-k,i-1]} P_{[i-k+2,i+1]})`.
pub fn eps<F: Field>(x: &XPoint<F>, i: i64) -> Result<F> {
    let (n, k) = (x.n(), x.k() as i64);
    let i = residue(n, i);
    let num = x.plucker(&union(&interval(i - k + 1, i - 1), &[i + 1])).mul(&x.plucker(&interval(i - k + 1, i)));
    let den = x.plucker(&interval(i - k, i - 1)).mul(&x.plucker(&interval(i - k + 2, i + 1)));
    let v = ratio(num, den, "eps")?;
    if i == k.rem_euclid(n as i64) {
        v.div(&x.t)
    } else {
        Ok(v)
    }
}

/// `e_i^c(N|t) = x_i((c-1)/φ_i) · N`, and `x_0((-1)^{k-1}(c-1)/(t φ_0)) · N` for `i = 0`.
pub fn e_c<F: Field>(x: &XPoint<F>, i: i64, c: &F) -> Result<XPoint<F>> {
    if c.is_zero() {
        return Err(GeomError::invalid("c must be non-zero"));
    }
    let n = x.n();
    let i = residue(n, i);
    let mut a = c.sub(&F::one()).div(&phi(x, i)?)?;
    if i == 0 {
        a = a.mul(&F::sign_pow(x.k() as i64 - 1)).div(&x.t)?;
    }
    let m = x_scalar(n, i, &a).mul(x.subspace.matrix())?;
    XPoint::new(m, x.t.clone())
}

/// Decoration of a single point.
pub fn decoration<F: Field>(x: &XPoint<F>) -> Result<F> {
    decoration_formula(x)
}

/// Diagonal `X_{11}, …, X_{nn}` of the unfolding.
pub fn gamma_from_matrix<F: Field>(a: &LoopMatrix<F>) -> Vec<F> {
    (1..=a.rows() as i64).map(|i| unfold_entry(a, i, i)).collect()
}

/// `φ_i = X_{i+1,i} / X_{ii}` on the unfolding.
pub fn phi_from_matrix<F: Field>(a: &LoopMatrix<F>, i: i64) -> Result<F> {
    ratio(unfold_entry(a, i + 1, i), unfold_entry(a, i, i), "phi")
}

/// `ε_i = X_{i+1,i} / X_{i+1,i+1}` on the unfolding.
pub fn eps_from_matrix<F: Field>(a: &LoopMatrix<F>, i: i64) -> Result<F> {
    ratio(unfold_entry(a, i + 1, i), unfold_entry(a, i + 1, i + 1), "eps")
}

fn check_nonempty<F>(xs: &[XPoint<F>]) -> Result<()> {
    if xs.is_empty() {
        Err(GeomError::invalid("empty product"))
    } else {
        Ok(())
    }
}

/// `γ` of a product: componentwise product.
pub fn prod_gamma<F: Field>(xs: &[XPoint<F>]) -> Result<Vec<F>> {
    check_nonempty(xs)?;
    let mut acc = gamma(&xs[0])?;
    for x in &xs[1..] {
        acc = acc.iter().zip(gamma(x)?).map(|(a, b)| a.mul(&b)).collect();
    }
    Ok(acc)
}

/// `(φ_i, ε_i)` of a product, bracketing left to right.
pub fn prod_phi_eps<F: Field>(xs: &[XPoint<F>], i: i64) -> Result<(F, F)> {
    check_nonempty(xs)?;
    let mut p = phi(&xs[0], i)?;
    let mut e = eps(&xs[0], i)?;
    for y in &xs[1..] {
        let (py, ey) = (phi(y, i)?, eps(y, i)?);
        let s = e.add(&py);
        let np = ratio(p.mul(&s), e.clone(), "product phi")?;
        let ne = ratio(ey.mul(&s), py, "product eps")?;
        p = np;
        e = ne;
    }
    Ok((p, e))
}

pub fn prod_phi<F: Field>(xs: &[XPoint<F>], i: i64) -> Result<F> {
    Ok(prod_phi_eps(xs, i)?.0)
}

pub fn prod_eps<F: Field>(xs: &[XPoint<F>], i: i64) -> Result<F> {
    Ok(prod_phi_eps(xs, i)?.1)
}

/// `e_i^c` on a product: `(x, y) ↦ (e_i^{c_1} x, e_i^{c_2} y)` with
/// `c_1 = (cε_i(x) + φ_i(y))/(ε_i(x) + φ_i(y))`, `c_2 = (ε_i(x) + φ_i(y))/(ε_i(x) + c^{-1}φ_i(y))`.
pub fn prod_e_c<F: Field>(xs: &[XPoint<F>], i: i64, c: &F) -> Result<Vec<XPoint<F>>> {
    check_nonempty(xs)?;
    if xs.len() == 1 {
        return Ok(vec![e_c(&xs[0], i, c)?]);
    }
    let (head, last) = xs.split_at(xs.len() - 1);
    let ex = prod_eps(head, i)?;
    let py = phi(&last[0], i)?;
    let s = ex.add(&py);
    let c1 = ratio(c.mul(&ex).add(&py), s.clone(), "product e_c")?;
    let c2 = ratio(s, ex.add(&py.div(c)?), "product e_c")?;
    let mut out = prod_e_c(head, i, &c1)?;
    out.push(e_c(&last[0], i, &c2)?);
    Ok(out)
}

/// Decoration of a product: the sum of the factors' decorations.
pub fn prod_f<F: Field>(xs: &[XPoint<F>]) -> Result<F> {
    check_nonempty(xs)?;
    xs.iter().try_fold(F::zero(), |acc, x| Ok(acc.add(&decoration(x)?)))
}

/// `PR`: rows shift down by one cyclically, the new first row is multiplied by `(-1)^{k-1} t`.
pub fn pr<F: Field>(x: &XPoint<F>) -> Result<XPoint<F>> {
    let (n, k) = (x.n(), x.k());
    let m = x.subspace.matrix();
    let factor = F::sign_pow(k as i64 - 1).mul(&x.t);
    let out = Mat::from_fn(n, k, |i, j| {
        if i == 0 {
            m.get(n - 1, j).mul(&factor)
        } else {
            m.get(i - 1, j).clone()
        }
    });
    XPoint::new(out, x.t.clone())
}

/// `PR^{-1}`.
pub fn pr_inverse<F: Field>(x: &XPoint<F>) -> Result<XPoint<F>> {
    let (n, k) = (x.n(), x.k());
    let m = x.subspace.matrix();
    let factor = F::sign_pow(k as i64 - 1).mul(&x.t).inv()?;
    let out = Mat::from_fn(n, k, |i, j| if i == n - 1 { m.get(0, j).mul(&factor) } else { m.get(i + 1, j).clone() });
    XPoint::new(out, x.t.clone())
}

/// `π^k_z(A)`: span of the first `k` columns of an already evaluated matrix.
pub fn project<F: Field>(a_eval: &Mat<F>, k: usize, t: &F) -> Result<XPoint<F>> {
    XPoint::new(a_eval.first_cols(k), t.clone())
}

/// `λ = (-1)^{k-1} t`.
pub fn eval_point<F: Field>(k: usize, t: &F) -> F {
    F::sign_pow(k as i64 - 1).mul(t)
}

/// Geometric Schützenberger involution `S = π^k_t ∘ fl ∘ g`.
pub fn schutzenberger<F: Field>(x: &XPoint<F>) -> Result<XPoint<F>> {
    let z = eval_point(x.k(), &x.t);
    project(&fl(&g_eval(x, &z)?), x.k(), &x.t)
}

/// `Q^J_t(N) = P_{w_0(J)}(S_t(N))`.
pub fn q_coordinate<F: Field>(x: &XPoint<F>, set: &[i64]) -> Result<F> {
    Ok(schutzenberger(x)?.plucker(&w0(x.n(), set)))
}

/// `μ(N) = T_{w_0}(N^⊥)` for the form `⟨v_i, v_j⟩ = (-1)^{i+1} δ_{ij}`; `t` is kept.
pub fn mu<F: Field>(x: &XPoint<F>) -> Result<XPoint<F>> {
    let n = x.n();
    let m = x.subspace.matrix();
    let form = Mat::from_fn(m.cols(), n, |j, i| m.get(i, j).mul(&F::sign_pow(i as i64)));
    let ker = form.kernel();
    let rev = Mat::from_fn(n, ker.cols(), |i, j| ker.get(n - 1 - i, j).clone());
    XPoint::new(rev, x.t.clone())
}

/// Duality `D = S ∘ μ : X_k → X_{n-k}`.
pub fn duality<F: Field>(x: &XPoint<F>) -> Result<XPoint<F>> {
    schutzenberger(&mu(x)?)
}

/// `PR` on a product acts factorwise.
pub fn prod_pr<F: Field>(xs: &[XPoint<F>]) -> Result<Vec<XPoint<F>>> {
    xs.iter().map(pr).collect()
}

/// `S` on a product reverses the order of the factors.
pub fn prod_schutzenberger<F: Field>(xs: &[XPoint<F>]) -> Result<Vec<XPoint<F>>> {
    xs.iter().rev().map(schutzenberger).collect()
}

/// `D` on a product reverses the order of the factors.
pub fn prod_duality<F: Field>(xs: &[XPoint<F>]) -> Result<Vec<XPoint<F>>> {
    xs.iter().rev().map(duality).collect()
}

/// Factorwise equality of two products.
pub fn same_points<F: Field>(a: &[XPoint<F>], b: &[XPoint<F>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_point(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Rational, Ring};
    use crate::grassmann::k_subsets;
    use crate::loopgroup::g_matrix;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn point() -> XPoint<Rational> {
        let m = Mat::from_rows(vec![
            vec![q(1), q(0)],
            vec![q(2), q(1)],
            vec![q(3), q(4)],
            vec![q(1), q(5)],
            vec![q(0), q(1)],
        ])
        .unwrap();
        XPoint::new(m, q(3)).unwrap()
    }

    #[test]
    fn ratio_identity_and_matrix_forms() {
        let x = point();
        let g = gamma(&x).unwrap();
        let a = g_matrix(&x).unwrap();
        assert_eq!(gamma_from_matrix(&a), g);
        for i in 0..5 {
            let (p, e) = (phi(&x, i).unwrap(), eps(&x, i).unwrap());
            let alpha = g[((i + 4) % 5) as usize].div(&g[i as usize]).unwrap();
            assert_eq!(e.div(&p).unwrap(), alpha, "i={i}");
            assert_eq!(phi_from_matrix(&a, i).unwrap(), p);
            assert_eq!(eps_from_matrix(&a, i).unwrap(), e);
        }
    }

    #[test]
    fn e_c_laws() {
        let x = point();
        for i in 0..5 {
            assert!(e_c(&x, i, &q(1)).unwrap().same_point(&x));
            let c1 = Rational::new(3, 2).unwrap();
            let c2 = q(5);
            let a = e_c(&e_c(&x, i, &c2).unwrap(), i, &c1).unwrap();
            let b = e_c(&x, i, &c1.mul(&c2)).unwrap();
            assert!(a.same_point(&b));
            let y = e_c(&x, i, &c2).unwrap();
            assert_eq!(phi(&y, i).unwrap(), phi(&x, i).unwrap().div(&c2).unwrap());
            assert_eq!(eps(&y, i).unwrap(), eps(&x, i).unwrap().mul(&c2));
        }
    }

    #[test]
    fn pr_plucker_law_and_order() {
        let x = point();
        let y = pr(&x).unwrap();
        assert_eq!(y.plucker(&[1, 2]), x.t.mul(&x.plucker(&[5, 1])));
        assert_eq!(y.plucker(&[3, 4]), x.plucker(&[2, 3]));
        let mut z = x.clone();
        for _ in 0..5 {
            z = pr(&z).unwrap();
        }
        assert!(z.same_point(&x));
        assert!(pr_inverse(&y).unwrap().same_point(&x));
    }

    #[test]
    fn mu_plucker_duality() {
        let x = point();
        let m = mu(&x).unwrap();
        assert_eq!(m.k(), 3);
        let ratios: Vec<_> = k_subsets(5, 3).iter().map(|j| (m.plucker(j), x.plucker(&crate::grassmann::star(5, j)))).collect();
        let (a0, b0) = ratios[0].clone();
        for (a, b) in ratios {
            assert_eq!(a.mul(&b0), b.mul(&a0));
        }
    }
}
