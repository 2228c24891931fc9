//! The geometric R-matrix, the geometric coenergy and the one-row formulas.

use crate::error::{GeomError, Result};
use crate::exactfield::{Field, Laurent, Ring};
use crate::geomcrystal::{eval_point, project, schutzenberger};
use crate::grassmann::{interval, k_subsets, theta, w0, RationalRect, XPoint};
use crate::loopgroup::{fl, g_eval, g_matrix, minor_delta, LoopMatrix, LoopPoly};
use crate::matrix::Mat;

/// `Ψ_{k,ℓ}(M|s, N|t) = π^k_t(g(M|s) g(N|t))`, computed as `g(M|s)|_{λ=(-1)^{k-1}t} · N`.
pub fn psi<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<XPoint<F>> {
    check_pair(u, v)?;
    let z = eval_point(v.k(), &v.t);
    let m = g_eval(u, &z)?.mul(v.subspace.matrix())?;
    project(&m, v.k(), &v.t)
}

fn check_pair<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<()> {
    if u.n() != v.n() {
        Err(GeomError::invalid("factors live in different n"))
    } else {
        Ok(())
    }
}

/// Output of the R-matrix together with `S_s(M')`, whose Plücker coordinates are
/// the `Q'` coordinates of `M'`.
#[derive(Clone, Debug)]
pub struct RDetail<F> {
    pub v_prime: XPoint<F>,
    pub u_prime: XPoint<F>,
    pub s_u_prime: XPoint<F>,
}

/// `R(u, v) = (Ψ_{k,ℓ}(u,v), S Ψ_{ℓ,k}(S v, S u))` for `u = M|s ∈ X_ℓ`, `v = N|t ∈ X_k`.
pub fn geom_r_detail<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<RDetail<F>> {
    let v_prime = psi(u, v)?;
    let su = schutzenberger(u)?;
    let z = eval_point(u.k(), &u.t);
    let w = fl(&g_eval(v, &z)?).mul(su.subspace.matrix())?;
    let s_u_prime = project(&w, u.k(), &u.t)?;
    let u_prime = schutzenberger(&s_u_prime)?;
    Ok(RDetail { v_prime, u_prime, s_u_prime })
}

/// `R(u, v) = (v', u')`.
pub fn geom_r<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<(XPoint<F>, XPoint<F>)> {
    let d = geom_r_detail(u, v)?;
    Ok((d.v_prime, d.u_prime))
}

/// `R` acting on factors `pos` and `pos + 1` of a product.
pub fn r_at<F: Field>(xs: &[XPoint<F>], pos: usize) -> Result<Vec<XPoint<F>>> {
    if pos + 1 >= xs.len() {
        return Err(GeomError::invalid("R position out of range"));
    }
    let (a, b) = geom_r(&xs[pos], &xs[pos + 1])?;
    let mut out = xs.to_vec();
    out[pos] = a;
    out[pos + 1] = b;
    Ok(out)
}

/// `E(u, v) = Δ_{[n-k+1,n],[k]}(g(u) g(v))` with `k = min(k_1, k_2)`, as a Laurent
/// polynomial in `λ` (it is constant).
pub fn geom_e_loop<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<LoopPoly<F>> {
    check_pair(u, v)?;
    let (n, k) = (u.n() as i64, u.k().min(v.k()) as i64);
    let a = g_matrix(u)?.mul(&g_matrix(v)?)?;
    minor_delta(&a, &interval(n - k + 1, n), &interval(1, k))
}

/// Geometric coenergy `E(u, v)`, evaluated at `λ = 0`.
pub fn geom_e<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<F> {
    check_pair(u, v)?;
    let (n, k) = (u.n() as i64, u.k().min(v.k()) as i64);
    let a = g_eval(u, &F::zero())?.mul(&g_eval(v, &F::zero())?)?;
    minor_delta(&a, &interval(n - k + 1, n), &interval(1, k))
}

/// `E` as a sum over Plücker coordinates of `N` and `Q`-coordinates of `M`.
pub fn geom_e_plucker<F: Field>(u: &XPoint<F>, v: &XPoint<F>) -> Result<F> {
    check_pair(u, v)?;
    let n = u.n();
    let (k1, k2) = (u.k() as i64, v.k() as i64);
    let su = schutzenberger(u)?;
    let q = |set: &[i64]| su.plucker(&w0(n, set));
    let q0 = q(&interval(1, k1));
    let p0 = v.plucker(&interval(n as i64 - k2 + 1, n as i64));
    let den = q0.mul(&p0);
    let mut acc = F::zero();
    if k1 >= k2 {
        let lo = k1 - k2;
        for s in k_subsets(n - lo as usize, k2 as usize) {
            let i: Vec<i64> = s.iter().map(|x| x + lo).collect();
            let mut ip = interval(1, lo);
            ip.extend_from_slice(&i);
            acc = acc.add(&q(&ip).mul(&v.plucker(&i)));
        }
    } else {
        for i in k_subsets((n as i64 - k2 + k1) as usize, k1 as usize) {
            let mut ipp = i.clone();
            ipp.extend(interval(n as i64 - k2 + k1 + 1, n as i64));
            acc = acc.add(&q(&i).mul(&v.plucker(&ipp)));
        }
    }
    acc.div(&den)
}

/// Both sides of `(t + (-1)^k λ) Q'_{[ℓ-1]∪{r}} / Q'_{[ℓ]} = Σ_a (-1)^{n+a} P'_{[n-k,n]∖{a}} / P'_{[n-k+1,n]} A_{ar}`
/// for `u = M|s ∈ X_ℓ`, `v = N|t ∈ X_k`, `A = g(u) g(v)`.
pub fn key_identity_sides<F: Field>(u: &XPoint<F>, v: &XPoint<F>, r: i64) -> Result<(LoopPoly<F>, LoopPoly<F>)> {
    check_pair(u, v)?;
    let n = u.n() as i64;
    if r < 1 || r > n {
        return Err(GeomError::invalid(format!("r must lie in 1..={n}")));
    }
    let (l, k) = (u.k() as i64, v.k() as i64);
    let d = geom_r_detail(u, v)?;
    let qp = |set: &[i64]| d.s_u_prime.plucker(&w0(n as usize, set));
    let mut set = interval(1, l - 1);
    set.push(r);
    let ratio = qp(&set).div(&qp(&interval(1, l)))?;
    let lhs = Laurent::from_coeffs(0, vec![v.t.clone(), F::sign_pow(k)]).scale(&ratio);
    let a: LoopMatrix<F> = g_matrix(u)?.mul(&g_matrix(v)?)?;
    let p_den = d.v_prime.plucker(&interval(n - k + 1, n));
    let mut rhs = <Laurent<F> as Ring>::zero();
    for ai in 1..=n {
        let rows: Vec<i64> = interval(n - k, n).into_iter().filter(|&x| x != ai).collect();
        let p = d.v_prime.plucker(&rows);
        if p.is_zero() {
            continue;
        }
        let c = F::sign_pow(n + ai).mul(&p.div(&p_den)?);
        rhs = rhs.add(&a.get((ai - 1) as usize, (r - 1) as usize).scale(&c));
    }
    Ok((lhs, rhs))
}

pub fn key_identity_check<F: Field>(u: &XPoint<F>, v: &XPoint<F>, r: i64) -> Result<bool> {
    let (l, r) = key_identity_sides(u, v, r)?;
    Ok(l == r)
}

fn x_index(n: usize, j: i64) -> usize {
    (j - 1).rem_euclid(n as i64) as usize
}

/// `I - ε` for `I = {i_1 < … < i_r}`, with `1 - 1` read as `n`; `None` on a collision.
fn minus_eps(n: usize, set: &[i64], eps: &[bool]) -> Option<Vec<i64>> {
    let mut out: Vec<i64> = set
        .iter()
        .zip(eps)
        .map(|(&i, &e)| if e { if i == 1 { n as i64 } else { i - 1 } } else { i })
        .collect();
    out.sort();
    out.dedup();
    (out.len() == set.len()).then_some(out)
}

/// Data of the one-row formulas: `x_1, …, x_n` of a one-row rectangle and `N|t = Θ(Y)`
/// for a `k`-row rectangle `Y`.
pub struct OneRow<F> {
    pub x: Vec<F>,
    pub y: RationalRect<F>,
    pub point: XPoint<F>,
}

impl<F: Field> OneRow<F> {
    pub fn new(x: Vec<F>, y: RationalRect<F>) -> Result<Self> {
        if x.len() != y.n {
            return Err(GeomError::invalid("x must have length n"));
        }
        if x.iter().any(|v| v.is_zero()) {
            return Err(GeomError::degenerate("x has a zero entry"));
        }
        let point = theta(&y)?;
        Ok(OneRow { x, y, point })
    }

    /// `τ_I = Σ_ε t^{δ_{i_1,1} δ_{ε_1,1}} ∏_{ε_s = 0} x_{i_s} P_{I-ε} / P_I` over `I ⊂ [n]` of size `n-k`.
    pub fn tau(&self, set: &[i64]) -> Result<F> {
        let n = self.y.n;
        let mut i = crate::grassmann::reduce_set(n, set);
        i.sort();
        let r = i.len();
        if r != n - self.y.k {
            return Err(GeomError::invalid("τ needs an (n-k)-subset"));
        }
        let mut acc = F::zero();
        for mask in 0..1u32 << r {
            let eps: Vec<bool> = (0..r).map(|s| mask >> s & 1 == 1).collect();
            let Some(j) = minus_eps(n, &i, &eps) else { continue };
            let mut term = self.point.plucker(&j);
            for s in 0..r {
                if !eps[s] {
                    term = term.mul(&self.x[x_index(n, i[s])]);
                }
            }
            if i[0] == 1 && eps[0] {
                term = term.mul(&self.y.t);
            }
            acc = acc.add(&term);
        }
        acc.div(&self.point.plucker(&i))
    }

    /// `κ_j = τ_{[j+k, j+n-1]}`.
    pub fn kappa(&self, j: i64) -> Result<F> {
        let (n, k) = (self.y.n as i64, self.y.k as i64);
        self.tau(&interval(j + k, j + n - 1))
    }

    /// `(Y', x')` with `Y'_{ij} = Y_{ij} τ_{[i,j] ∪ [k+j-i+2,n]} / τ_{[i+1,j] ∪ [k+j-i+1,n]}`
    /// and `x'_j = x_j κ_j / κ_{j+1}`.
    pub fn r(&self) -> Result<(RationalRect<F>, Vec<F>)> {
        let (n, k) = (self.y.n as i64, self.y.k as i64);
        let mut rows = Vec::with_capacity(k as usize);
        for i in 1..=k {
            let mut row = Vec::new();
            for j in i..=i + n - k - 1 {
                let mut top = interval(i, j);
                top.extend(interval(k + j - i + 2, n));
                let mut bot = interval(i + 1, j);
                bot.extend(interval(k + j - i + 1, n));
                let y = self.y.big_x(i as usize, j as usize);
                row.push(y.mul(&self.tau(&top)?).div(&self.tau(&bot)?)?);
            }
            rows.push(row);
        }
        let kap: Vec<F> = (1..=n).map(|j| self.kappa(j)).collect::<Result<_>>()?;
        let xp = (0..n as usize).map(|j| self.x[j].mul(&kap[j]).div(&kap[(j + 1) % n as usize])).collect::<Result<_>>()?;
        Ok((RationalRect::new(n as usize, k as usize, rows, self.y.t.clone())?, xp))
    }
}

/// One-row rectangle `(X_{11}, …, X_{1,n-1}, s)` from `x_1, …, x_n`.
pub fn one_row_rect<F: Field>(x: &[F]) -> Result<RationalRect<F>> {
    let n = x.len();
    let mut acc = F::one();
    let mut row = Vec::with_capacity(n - 1);
    for v in &x[..n - 1] {
        acc = acc.mul(v);
        row.push(acc.clone());
    }
    let s = acc.mul(&x[n - 1]);
    RationalRect::new(n, 1, vec![row], s)
}

/// `x_j = X_{1j} / X_{1,j-1}` of a one-row rectangle.
pub fn one_row_x<F: Field>(r: &RationalRect<F>) -> Vec<F> {
    (1..=r.n).map(|j| r.small_x(1, j)).collect()
}

/// Explicit one-row R-matrix; returns `(Y', x')`.
pub fn one_row_r<F: Field>(x: &[F], y: &RationalRect<F>) -> Result<(RationalRect<F>, Vec<F>)> {
    OneRow::new(x.to_vec(), y.clone())?.r()
}

/// One-row by one-row: `y'_j = y_j κ_{j+1}/κ_j`, `x'_j = x_j κ_j/κ_{j+1}` with
/// `κ_j = Σ_{s=0}^{n-1} y_j ⋯ y_{j+s-1} x_{j+s+1} ⋯ x_{j+n-1}`.
pub fn one_by_one_r<F: Field>(x: &[F], y: &[F]) -> Result<(Vec<F>, Vec<F>)> {
    let n = x.len();
    if y.len() != n || n < 2 {
        return Err(GeomError::invalid("x and y must have equal length n ≥ 2"));
    }
    let kappa: Vec<F> = (0..n)
        .map(|j| {
            (0..n).fold(F::zero(), |acc, s| {
                let ys = (j..j + s).fold(F::one(), |p, m| p.mul(&y[m % n]));
                let xs = (j + s + 1..j + n).fold(F::one(), |p, m| p.mul(&x[m % n]));
                acc.add(&ys.mul(&xs))
            })
        })
        .collect();
    let yp = (0..n).map(|j| y[j].mul(&kappa[(j + 1) % n]).div(&kappa[j])).collect::<Result<_>>()?;
    let xp = (0..n).map(|j| x[j].mul(&kappa[j]).div(&kappa[(j + 1) % n])).collect::<Result<_>>()?;
    Ok((yp, xp))
}

/// The matrices `g` of the two factors and of the swapped factors agree.
pub fn matrix_identity_holds<F: Field>(u: &XPoint<F>, v: &XPoint<F>, vp: &XPoint<F>, up: &XPoint<F>) -> Result<bool> {
    let lhs = g_matrix(u)?.mul(&g_matrix(v)?)?;
    let rhs = g_matrix(vp)?.mul(&g_matrix(up)?)?;
    Ok(lhs == rhs)
}

/// `g` of the one-row chart: `x_1, …, x_n` on the diagonal, 1 below, `λ` in the corner.
pub fn one_row_matrix<F: Field>(x: &[F]) -> LoopMatrix<F> {
    let n = x.len();
    let mut m: LoopMatrix<F> = Mat::zeros(n, n);
    for i in 0..n {
        m.set(i, i, Laurent::constant(x[i].clone()));
        if i + 1 < n {
            m.set(i + 1, i, Laurent::constant(F::one()));
        }
    }
    m.set(0, n - 1, Laurent::monomial(F::one(), 1));
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;
    use crate::sampling::Sampler;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn one_by_one_example() {
        let (yp, xp) = one_by_one_r(&[q(1), q(5)], &[q(2), q(7)]).unwrap();
        assert_eq!(xp, vec![Rational::new(7, 8).unwrap(), Rational::new(40, 7).unwrap()]);
        assert_eq!(yp, vec![Rational::new(16, 7).unwrap(), Rational::new(49, 8).unwrap()]);
    }

    #[test]
    fn r_matrix_identity_small() {
        let mut s = Sampler::new(3);
        for profile in [[1usize, 1], [1, 2], [2, 1], [2, 2]] {
            let p = s.points(4, &profile).unwrap();
            let (vp, up) = geom_r(&p[0], &p[1]).unwrap();
            assert!(matrix_identity_holds(&p[0], &p[1], &vp, &up).unwrap(), "{profile:?}");
            let (a, b) = geom_r(&vp, &up).unwrap();
            assert!(a.same_point(&p[0]) && b.same_point(&p[1]));
        }
    }
}
