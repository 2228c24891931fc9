//! Loop-group matrices: `n × n` matrices of Laurent polynomials in `λ`, their
//! unfoldings, the map `g : X_k → B⁻`, and the symmetries `sh`, `fl`, `inv`.

use crate::error::{GeomError, Result};
use crate::exactfield::{Field, Laurent, Ring};
use crate::grassmann::{interval, XPoint};
use crate::matrix::Mat;

pub type LoopPoly<F> = Laurent<F>;
pub type LoopMatrix<F> = Mat<Laurent<F>>;

fn set_union(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut s = a.to_vec();
    s.extend_from_slice(b);
    s
}

/// `g(N|t)`: `A_{ij} = c_{ij} P_{[j-k+1,j-1] ∪ {i}} / P_{[j-k,j-1]}` with
/// `c_{ij} = 1` for `j ≤ k`, `t` for `j > k, i ≥ j`, `λ` for `j > k, i < j`.
pub fn g_matrix<F: Field>(x: &XPoint<F>) -> Result<LoopMatrix<F>> {
    let (n, k) = (x.n(), x.k() as i64);
    let dens = cyclic_denominators(x)?;
    let mut a = Mat::zeros(n, n);
    for j in 1..=n as i64 {
        let den = &dens[(j - 1) as usize];
        let base = interval(j - k + 1, j - 1);
        for i in 1..=n as i64 {
            let p = x.plucker(&set_union(&base, &[i]));
            if p.is_zero() {
                continue;
            }
            let v = p.mul(den);
            let entry = if j <= k {
                Laurent::constant(v)
            } else if i >= j {
                Laurent::constant(v.mul(&x.t))
            } else {
                Laurent::monomial(v, 1)
            };
            a.set((i - 1) as usize, (j - 1) as usize, entry);
        }
    }
    Ok(a)
}

/// Inverses of the cyclic Plücker coordinates `P_{[j-k,j-1]}`, `j = 1..n`.
fn cyclic_denominators<F: Field>(x: &XPoint<F>) -> Result<Vec<F>> {
    let k = x.k() as i64;
    (1..=x.n() as i64)
        .map(|j| {
            x.plucker(&interval(j - k, j - 1))
                .inv()
                .map_err(|_| GeomError::degenerate("a cyclic Plücker coordinate vanishes"))
        })
        .collect()
}

/// `g(N|t)` evaluated at `λ = z`, without forming Laurent polynomials.
pub fn g_eval<F: Field>(x: &XPoint<F>, z: &F) -> Result<Mat<F>> {
    let (n, k) = (x.n(), x.k() as i64);
    let dens = cyclic_denominators(x)?;
    let mut a = Mat::zeros(n, n);
    for j in 1..=n as i64 {
        let base = interval(j - k + 1, j - 1);
        let c = if j <= k { None } else { Some(()) };
        for i in 1..=n as i64 {
            let p = x.plucker(&set_union(&base, &[i]));
            if p.is_zero() {
                continue;
            }
            let mut v = p.mul(&dens[(j - 1) as usize]);
            if c.is_some() {
                v = if i >= j { v.mul(&x.t) } else { v.mul(z) };
            }
            a.set((i - 1) as usize, (j - 1) as usize, v);
        }
    }
    Ok(a)
}

/// `g(x_1) ⋯ g(x_d)`.
pub fn g_product<F: Field>(points: &[XPoint<F>]) -> Result<LoopMatrix<F>> {
    let n = points.first().ok_or_else(|| GeomError::invalid("empty product"))?.n();
    let mut acc = Mat::identity(n);
    for p in points {
        if p.n() != n {
            return Err(GeomError::invalid("factors live in different n"));
        }
        acc = acc.mul(&g_matrix(p)?)?;
    }
    Ok(acc)
}

/// Evaluate every entry at `λ = z`.
pub fn eval_loop<F: Field>(a: &LoopMatrix<F>, z: &F) -> Result<Mat<F>> {
    a.try_map(|p| p.eval(z))
}

/// Substitute `λ → -λ` in every entry.
pub fn negate_lambda<F: Field>(a: &LoopMatrix<F>) -> LoopMatrix<F> {
    a.map(|p| p.negate_var())
}

/// Entry `X_{p,q}` of the unfolding, `p, q ∈ ℤ`: the coefficient of `λ^{r-s}` in
/// `A_{ij}` where `p = rn + i`, `q = sn + j`.
pub fn unfold_entry<F: Field>(a: &LoopMatrix<F>, p: i64, q: i64) -> F {
    let n = a.rows() as i64;
    let i = (p - 1).rem_euclid(n) + 1;
    let j = (q - 1).rem_euclid(n) + 1;
    let (r, s) = ((p - i) / n, (q - j) / n);
    a.get((i - 1) as usize, (j - 1) as usize).coeff(r - s)
}

/// Finite window `X_{p,q}` for `p, q ∈ [lo, hi]` of the unfolding.
pub fn unfold<F: Field>(a: &LoopMatrix<F>, lo: i64, hi: i64) -> Mat<F> {
    let size = (hi - lo + 1).max(0) as usize;
    Mat::from_fn(size, size, |r, c| unfold_entry(a, lo + r as i64, lo + c as i64))
}

/// Fold an `n`-periodic matrix given entrywise; `X_{p,q}` must vanish unless
/// `⌊(p-1)/n⌋ - ⌊(q-1)/n⌋ ∈ [dmin, dmax]`.
pub fn fold<F: Field>(n: usize, dmin: i64, dmax: i64, x: impl Fn(i64, i64) -> F) -> LoopMatrix<F> {
    Mat::from_fn(n, n, |i, j| {
        let coeffs = (dmin..=dmax).map(|d| x(d * n as i64 + i as i64 + 1, j as i64 + 1)).collect();
        Laurent::from_coeffs(dmin, coeffs)
    })
}

fn degree_range<F: Field>(a: &LoopMatrix<F>) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for row in a.to_rows() {
        for p in row {
            if let (Some(o), Some(d)) = (p.ord(), p.deg()) {
                lo = lo.min(o);
                hi = hi.max(d);
            }
        }
    }
    if lo > hi {
        (0, 0)
    } else {
        (lo, hi)
    }
}

/// `sh(X)_{ij} = X_{i-1,j-1}` on the unfolding.
pub fn sh<F: Field>(a: &LoopMatrix<F>) -> LoopMatrix<F> {
    let (lo, hi) = degree_range(a);
    fold(a.rows(), lo - 1, hi + 1, |p, q| unfold_entry(a, p - 1, q - 1))
}

/// `fl(A)_{ij} = A_{n-j+1, n-i+1}`: reflection in the anti-diagonal.
pub fn fl<R: Ring>(a: &Mat<R>) -> Mat<R> {
    let n = a.rows();
    Mat::from_fn(n, n, |i, j| a.get(n - 1 - j, n - 1 - i).clone())
}

/// `inv(A)_{ij} = Δ_{[n]∖{j}, [n]∖{i}}(A|_{λ → (-1)^n λ})`.
pub fn inv<F: Field>(a: &LoopMatrix<F>) -> Result<LoopMatrix<F>> {
    let n = a.rows();
    let al = if n % 2 == 1 { negate_lambda(a) } else { a.clone() };
    if al.det()?.is_zero() {
        return Err(GeomError::degenerate("inv of a singular matrix"));
    }
    let all: Vec<usize> = (0..n).collect();
    let without = |x: usize| all.iter().copied().filter(|&v| v != x).collect::<Vec<_>>();
    let mut out = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, al.minor(&without(j), &without(i))?);
        }
    }
    Ok(out)
}

/// `Δ_{I,J}(A)` for one-based index sets, rows and columns in increasing order.
pub fn minor_delta<R: Ring>(a: &Mat<R>, rows: &[i64], cols: &[i64]) -> Result<R> {
    let conv = |s: &[i64], bound: usize| -> Result<Vec<usize>> {
        let mut v: Vec<usize> = s
            .iter()
            .map(|&x| {
                if x >= 1 && (x as usize) <= bound {
                    Ok(x as usize - 1)
                } else {
                    Err(GeomError::invalid(format!("index {x} outside 1..={bound}")))
                }
            })
            .collect::<Result<_>>()?;
        v.sort();
        v.dedup();
        if v.len() != s.len() {
            return Err(GeomError::invalid("repeated index in minor"));
        }
        Ok(v)
    };
    let r = conv(rows, a.rows())?;
    let c = conv(cols, a.cols())?;
    a.minor(&r, &c)
}

/// The `m` for which `A` is `m`-shifted unipotent, if any.
pub fn shifted_unipotent_index<F: Field>(a: &LoopMatrix<F>) -> Option<i64> {
    let n = a.rows() as i64;
    let mut m = i64::MIN;
    for i in 0..n {
        for j in 0..n {
            for (d, _) in a.get(i as usize, j as usize).terms() {
                m = m.max(d * n + i - j);
            }
        }
    }
    if m == i64::MIN {
        return None;
    }
    (1..=n).all(|q| unfold_entry(a, q + m, q).is_one()).then_some(m)
}

/// `χ(X) = Σ_{j=1}^n X_{j+m-1, j}` for `m`-shifted unipotent `X`.
pub fn chi<F: Field>(a: &LoopMatrix<F>) -> Result<F> {
    let m = shifted_unipotent_index(a).ok_or_else(|| GeomError::invalid("matrix is not shifted unipotent"))?;
    let n = a.rows() as i64;
    Ok((1..=n).fold(F::zero(), |acc, j| acc.add(&unfold_entry(a, j + m - 1, j))))
}

/// Membership in `B⁻`: polynomial entries, diagonal entries with non-zero
/// constant term, entries above the diagonal without constant term.
pub fn is_in_bminus<F: Field>(a: &LoopMatrix<F>) -> bool {
    let n = a.rows();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let p = a.get(i, j);
            let poly = p.ord().map_or(true, |o| o >= 0);
            let c0 = p.coeff(0);
            poly && (i != j || !c0.is_zero()) && (j <= i || c0.is_zero())
        })
    })
}

/// `x̂_i(a) = Id + a E_{i,i+1}` for `i ∈ [n-1]`, `x̂_0(a) = Id + a λ^{-1} E_{n1}`;
/// `i` is read mod `n`.
pub fn xhat<F: Field>(n: usize, i: i64, a: &F) -> LoopMatrix<F> {
    let i = i.rem_euclid(n as i64) as usize;
    let mut m = Mat::identity(n);
    if i == 0 {
        m.set(n - 1, 0, Laurent::monomial(a.clone(), -1));
    } else {
        m.set(i - 1, i, Laurent::constant(a.clone()));
    }
    m
}

/// `x_i(a) = Id + a E_{i,i+1}`, `x_0(a) = Id + a E_{n1}` as scalar matrices.
pub fn x_scalar<F: Field>(n: usize, i: i64, a: &F) -> Mat<F> {
    let i = i.rem_euclid(n as i64) as usize;
    let mut m = Mat::identity(n);
    if i == 0 {
        m.set(n - 1, 0, a.clone());
    } else {
        m.set(i - 1, i, a.clone());
    }
    m
}

/// `x̂_i(a).X = x̂_i(a) · X · x̂_i(τ_i(a,X))` with
/// `τ_i = -a X_{i+1,i+1} / (X_{ii} + a X_{i+1,i})` on the unfolding.
pub fn uaction_bminus<F: Field>(i: i64, a: &F, x: &LoopMatrix<F>) -> Result<LoopMatrix<F>> {
    let n = x.rows();
    let xii = unfold_entry(x, i, i);
    let xjj = unfold_entry(x, i + 1, i + 1);
    let xji = unfold_entry(x, i + 1, i);
    let den = xii.add(&a.mul(&xji));
    let tau = a.mul(&xjj).neg().div(&den).map_err(|_| GeomError::degenerate("U-action undefined at this point"))?;
    xhat(n, i, a).mul(x)?.mul(&xhat(n, i, &tau))
}

/// `u.(N|t) = (u|_{λ=(-1)^{k-1}t} · N)|t`.
pub fn uaction_x<F: Field>(u: &LoopMatrix<F>, x: &XPoint<F>) -> Result<XPoint<F>> {
    let z = F::sign_pow(x.k() as i64 - 1).mul(&x.t);
    let m = eval_loop(u, &z)?.mul(x.subspace.matrix())?;
    XPoint::new(m, x.t.clone())
}

/// Decoration `f(x_1, …, x_d) = χ(g(x_1) ⋯ g(x_d))`.
pub fn decoration_f<F: Field>(points: &[XPoint<F>]) -> Result<F> {
    chi(&g_product(points)?)
}

/// Closed form of the decoration of a single point:
/// `Σ_{i≠k} P_{{i-k} ∪ [i-k+2,i]} / P_{[i-k+1,i]} + t P_{[2,k] ∪ {n}} / P_{[1,k]}`.
pub fn decoration_formula<F: Field>(x: &XPoint<F>) -> Result<F> {
    let (n, k) = (x.n() as i64, x.k() as i64);
    let mut acc = F::zero();
    for i in 1..=n {
        if i == k {
            continue;
        }
        let num = x.plucker(&set_union(&[i - k], &interval(i - k + 2, i)));
        acc = acc.add(&num.div(&x.plucker(&interval(i - k + 1, i)))?);
    }
    let last = x.plucker(&set_union(&interval(2, k), &[n]));
    Ok(acc.add(&x.t.mul(&last).div(&x.plucker(&interval(1, k)))?))
}

/// `(t + c λ)^e` as a Laurent polynomial.
pub fn linear_power<F: Field>(t: &F, c: &F, e: u32) -> LoopPoly<F> {
    Laurent::from_coeffs(0, vec![t.clone(), c.clone()]).pow(e)
}

/// `r`-non-negativity: `(-1)^{(r-1)i} f_i ≥ 0` for every coefficient `f_i` of `λ^i`,
/// and no negative powers of `λ`.
pub fn is_r_nonnegative<F: Field>(p: &LoopPoly<F>, r: i64) -> bool {
    p.terms().all(|(i, c)| i >= 0 && F::sign_pow((r - 1) * i).mul(c).signum() >= 0)
}

/// Rows of `g` on `X_k` vanishing identically in every column of `cols`: column
/// `j` vanishes in rows `[j-k+1, j-1]` (mod `n`). Empty for empty `cols`.
pub fn zero_rows(n: usize, k: usize, cols: &[i64]) -> Vec<i64> {
    if cols.is_empty() {
        return Vec::new();
    }
    let k = k as i64;
    (1..=n as i64)
        .filter(|&row| {
            cols.iter().all(|&j| crate::grassmann::reduce_set(n, &interval(j - k + 1, j - 1)).contains(&row))
        })
        .collect()
}

/// Reflected basic subset `J_{a,b} = [1,a] ∪ [a+b+1, r+b]`.
pub fn reflected_basic(a: i64, b: i64, r: i64) -> Vec<i64> {
    let mut s = interval(1, a);
    s.extend(interval(a + b + 1, r + b));
    s
}

/// Condition `C^r_{a,b}` on an `r`-subset `I` for `X_k`: `I` avoids `Z(J_{a,b})`,
/// `|I ∩ Z_1| ≤ r - a` and `|I ∩ Z_2| ≤ a`.
pub fn satisfies_c(n: usize, k: usize, r: i64, a: i64, b: i64, rows: &[i64]) -> bool {
    let z = zero_rows(n, k, &reflected_basic(a, b, r));
    let z1 = zero_rows(n, k, &interval(1, a));
    let z2 = zero_rows(n, k, &interval(a + b + 1, r + b));
    let count = |zs: &[i64]| rows.iter().filter(|i| zs.contains(i)).count() as i64;
    count(&z) == 0 && count(&z1) <= r - a && count(&z2) <= a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn lp(offset: i64, c: &[i64]) -> Laurent<Rational> {
        Laurent::from_coeffs(offset, c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn unfolding_example() {
        let a = Mat::from_rows(vec![
            vec![lp(-1, &[2, 3, 4, 5]), lp(-1, &[1, 7, 8])],
            vec![lp(-1, &[-3, 1, 0, 1]), lp(-1, &[-2, 5, 6])],
        ])
        .unwrap();
        assert_eq!(unfold_entry(&a, 3, 1), q(4));
        assert_eq!(unfold_entry(&a, 1, 1), q(3));
        assert_eq!(unfold_entry(&a, 1, 3), q(2));
        assert_eq!(unfold_entry(&a, 2, 4), q(-2));
        assert_eq!(unfold_entry(&a, 4, 1), q(0));
        assert_eq!(unfold_entry(&a, 5, 1), q(5));
        assert_eq!(unfold_entry(&a, 6, 1), q(1));
        assert_eq!(unfold_entry(&a, 1, 5), q(0));
        let back = fold(2, -1, 2, |p, q2| unfold_entry(&a, p, q2));
        assert_eq!(back, a);
    }

    #[test]
    fn sh_has_order_n() {
        let a = Mat::from_rows(vec![
            vec![lp(0, &[1, 2]), lp(1, &[3]), lp(0, &[0, 1])],
            vec![lp(0, &[4]), lp(0, &[5, 1]), lp(-1, &[2])],
            vec![lp(0, &[1]), lp(0, &[6]), lp(0, &[7, 0, 1])],
        ])
        .unwrap();
        let mut b = a.clone();
        for _ in 0..3 {
            b = sh(&b);
        }
        assert_eq!(b, a);
        assert_ne!(sh(&a), a);
    }

    #[test]
    fn laurent_exact_division() {
        let p = lp(0, &[1, 1]).pow(3).mul(&lp(-1, &[2, 0, 5]));
        assert_eq!(p.div_exact(&lp(0, &[1, 1])).unwrap(), lp(0, &[1, 1]).pow(2).mul(&lp(-1, &[2, 0, 5])));
        assert!(lp(0, &[1, 2]).div_exact(&lp(0, &[1, 1])).is_none());
    }
}
