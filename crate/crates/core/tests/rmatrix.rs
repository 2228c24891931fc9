mod common;

use common::{q, qq};
use geomr::exactfield::{Laurent, Rational};
use geomr::geomcrystal::*;
use geomr::grassmann::{k_subsets, theta, RationalRect, XPoint};
use geomr::loopgroup::{eval_loop, g_matrix, g_product};
use geomr::rmatrix::*;
use geomr::sampling::Sampler;
use geomr::tableaux::{comb_coenergy, comb_r_oracle, enumerate_rect, KRectangle, Tableau};
use geomr::tropical::{trop_e, trop_eval_fn, trop_r};
use geomr::{EpsRational, Field, Ring};

type P = XPoint<Rational>;

fn pair(n: usize, l: usize, k: usize, s: &mut Sampler) -> (P, P) {
    let v = s.points(n, &[l, k]).unwrap();
    (v[0].clone(), v[1].clone())
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

#[test]
fn psi_examples() {
    let mut s = Sampler::new(1);
    for (n, k) in [(4, 2), (5, 3), (5, 1)] {
        let u = s.point(n, k).unwrap();
        assert!(psi(&u, &u).unwrap().same_point(&u));
    }
    for profile in [vec![2, 1], vec![1, 3, 2], vec![2, 2, 2]] {
        let xs = s.points(4, &profile).unwrap();
        let a = g_product(&xs).unwrap();
        let z = eval_point(xs[0].k(), &xs[0].t);
        let first = project(&eval_loop(&a, &z).unwrap(), xs[0].k(), &xs[0].t).unwrap();
        assert!(first.same_point(&xs[0]));
    }
    let (u, v) = pair(5, 2, 3, &mut s);
    let vp = psi(&u, &v).unwrap();
    let z = eval_point(v.k(), &v.t);
    let b = eval_loop(&g_matrix(&u).unwrap().mul(&g_matrix(&v).unwrap()).unwrap(), &z).unwrap();
    let cols: Vec<usize> = (0..3).collect();
    let base = vec![1i64, 2, 3];
    let minor = |set: &[i64]| b.minor(&set.iter().map(|&i| i as usize - 1).collect::<Vec<_>>(), &cols).unwrap();
    for i in k_subsets(5, 3) {
        assert_eq!(vp.plucker(&i).div(&vp.plucker(&base)).unwrap(), minor(&i).div(&minor(&base)).unwrap());
    }
}

#[test]
fn r_matrix_identity_and_involution() {
    let mut s = Sampler::new(2);
    for (n, l, k) in [(3, 1, 1), (3, 1, 2), (4, 1, 2), (4, 2, 2), (5, 2, 3), (5, 3, 1)] {
        for _ in 0..10 {
            let (u, v) = pair(n, l, k, &mut s);
            let (vp, up) = geom_r(&u, &v).unwrap();
            assert_eq!((vp.k(), up.k()), (k, l));
            assert_eq!((&vp.t, &up.t), (&v.t, &u.t));
            assert!(matrix_identity_holds(&u, &v, &vp, &up).unwrap());
            let (u2, v2) = geom_r(&vp, &up).unwrap();
            assert!(u2.same_point(&u) && v2.same_point(&v));
        }
    }
}

#[test]
fn r_preserves_crystal_structure() {
    let mut s = Sampler::new(3);
    for (n, l, k) in [(4, 1, 2), (4, 2, 3), (5, 2, 2)] {
        let (u, v) = pair(n, l, k, &mut s);
        let (vp, up) = geom_r(&u, &v).unwrap();
        let (a, b) = (vec![u, v], vec![vp, up]);
        assert_eq!(prod_gamma(&a).unwrap(), prod_gamma(&b).unwrap());
        assert_eq!(prod_f(&a).unwrap(), prod_f(&b).unwrap());
        for i in 0..n as i64 {
            assert_eq!(prod_phi_eps(&a, i).unwrap(), prod_phi_eps(&b, i).unwrap());
        }
    }
}

#[test]
fn yang_baxter() {
    let mut s = Sampler::new(4);
    for profile in [[1, 1, 1], [1, 2, 1], [2, 2, 1]] {
        for _ in 0..5 {
            let xs = s.points(4, &profile).unwrap();
            let lhs = r_at(&r_at(&r_at(&xs, 0).unwrap(), 1).unwrap(), 0).unwrap();
            let rhs = r_at(&r_at(&r_at(&xs, 1).unwrap(), 0).unwrap(), 1).unwrap();
            assert!(same_points(&lhs, &rhs), "{profile:?}");
        }
    }
}

fn r2(xs: &[P]) -> Vec<P> {
    r_at(xs, 0).unwrap()
}

#[test]
fn equivariance() {
    let mut s = Sampler::new(5);
    let c = qq(5, 3);
    for (n, l, k) in [(4, 1, 2), (4, 2, 2), (5, 3, 2)] {
        let (u, v) = pair(n, l, k, &mut s);
        let xs = vec![u, v];
        for i in 0..n as i64 {
            let lhs = r2(&prod_e_c(&xs, i, &c).unwrap());
            let rhs = prod_e_c(&r2(&xs), i, &c).unwrap();
            assert!(same_points(&lhs, &rhs), "e_{i}");
        }
        assert!(same_points(&r2(&prod_pr(&xs).unwrap()), &prod_pr(&r2(&xs)).unwrap()));
        assert!(same_points(&r2(&prod_schutzenberger(&xs).unwrap()), &prod_schutzenberger(&r2(&xs)).unwrap()));
        assert!(same_points(&r2(&prod_duality(&xs).unwrap()), &prod_duality(&r2(&xs)).unwrap()));
    }
}

#[test]
fn factorization_is_unique_among_perturbations() {
    let mut s = Sampler::new(6);
    let (u, v) = pair(4, 1, 2, &mut s);
    let (vp, up) = geom_r(&u, &v).unwrap();
    for i in 0..4 {
        let moved = e_c(&vp, i, &qq(3, 2)).unwrap();
        assert!(!matrix_identity_holds(&u, &v, &moved, &up).unwrap());
    }
    let swapped = XPoint::new(vp.subspace.matrix().clone(), up.t.clone()).unwrap();
    assert!(!matrix_identity_holds(&u, &v, &swapped, &up).unwrap());
}

#[test]
fn coenergy_forms_and_law() {
    let mut s = Sampler::new(7);
    let c = qq(7, 2);
    for (n, l, k) in [(4, 1, 2), (4, 2, 1), (4, 2, 2), (5, 3, 2), (5, 2, 4)] {
        for _ in 0..3 {
            let (u, v) = pair(n, l, k, &mut s);
            let e = geom_e(&u, &v).unwrap();
            assert_eq!(geom_e_loop(&u, &v).unwrap(), Laurent::constant(e.clone()));
            assert_eq!(geom_e_plucker(&u, &v).unwrap(), e);
            let xs = vec![u.clone(), v.clone()];
            for i in 1..n as i64 {
                let m = prod_e_c(&xs, i, &c).unwrap();
                assert_eq!(geom_e(&m[0], &m[1]).unwrap(), e);
            }
            let (vp, up) = geom_r(&u, &v).unwrap();
            let m = prod_e_c(&xs, 0, &c).unwrap();
            let (e0u, p0v) = (eps(&u, 0).unwrap(), phi(&v, 0).unwrap());
            let (e0v, p0u) = (eps(&vp, 0).unwrap(), phi(&up, 0).unwrap());
            let f1 = e0u.add(&p0v.div(&c).unwrap()).div(&e0u.add(&p0v)).unwrap();
            let f2 = c.mul(&e0v).add(&p0u).div(&e0v.add(&p0u)).unwrap();
            assert_eq!(geom_e(&m[0], &m[1]).unwrap(), e.mul(&f1).mul(&f2));
        }
    }
}

#[test]
fn one_row_coenergy_is_kappa_one() {
    let mut s = Sampler::new(8);
    for (n, k) in [(4, 2), (5, 2), (5, 3)] {
        let x: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
        let t = s.rational();
        let y = s.rect(n, k, t).unwrap();
        let data = OneRow::new(x.clone(), y.clone()).unwrap();
        let u = theta(&one_row_rect(&x).unwrap()).unwrap();
        let e = geom_e(&u, &data.point).unwrap();
        assert_eq!(e, data.kappa(1).unwrap());
        let mut sum = q(0);
        for st in 0..=(n - k) {
            let xs = (k + st + 1..=n).fold(q(1), |acc, j| acc.mul(&x[j - 1]));
            sum = sum.add(&xs.mul(&y.big_x(k, k + st - 1)));
        }
        assert_eq!(e, sum);
    }
}

#[test]
fn tau_display_seven_four() {
    let mut s = Sampler::new(9);
    let x: Vec<Rational> = (0..7).map(|_| s.rational()).collect();
    let t = s.rational();
    let y = s.rect(7, 4, t.clone()).unwrap();
    let data = OneRow::new(x.clone(), y).unwrap();
    let p = |a: &[i64]| data.point.plucker(a);
    let xi = |i: usize| x[i - 1].clone();
    let num = xi(1)
        .mul(&xi(4))
        .mul(&xi(5))
        .mul(&p(&[1, 4, 5]))
        .add(&xi(1).mul(&xi(5)).mul(&p(&[1, 3, 5])))
        .add(&xi(1).mul(&p(&[1, 3, 4])))
        .add(&t.mul(&xi(4)).mul(&xi(5)).mul(&p(&[4, 5, 7])))
        .add(&t.mul(&xi(5)).mul(&p(&[3, 5, 7])))
        .add(&t.mul(&p(&[3, 4, 7])));
    assert_eq!(data.tau(&[1, 4, 5]).unwrap(), num.div(&p(&[1, 4, 5])).unwrap());
}

#[test]
fn kappa_one_small_example() {
    let mut s = Sampler::new(10);
    let x: Vec<Rational> = (0..4).map(|_| s.rational()).collect();
    let t = s.rational();
    let y = s.rect(4, 2, t).unwrap();
    let (y22, y23) = (y.small_x(2, 2), y.small_x(2, 3));
    let data = OneRow::new(x.clone(), y).unwrap();
    let want = x[2].mul(&x[3]).add(&x[3].mul(&y22)).add(&y22.mul(&y23));
    assert_eq!(data.kappa(1).unwrap(), want);
}

#[test]
fn one_row_formulas_agree_with_r() {
    let mut s = Sampler::new(11);
    for (n, k) in [(3, 1), (3, 2), (4, 2), (5, 2), (5, 3), (6, 4)] {
        for _ in 0..3 {
            let x: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
            let t = s.rational();
            let y = s.rect(n, k, t).unwrap();
            let (yp, xp) = one_row_r(&x, &y).unwrap();
            let u = theta(&one_row_rect(&x).unwrap()).unwrap();
            let v = theta(&y).unwrap();
            let (vp, up) = geom_r(&u, &v).unwrap();
            assert!(theta(&yp).unwrap().same_point(&vp));
            assert!(theta(&one_row_rect(&xp).unwrap()).unwrap().same_point(&up));
            let prod = |v: &[Rational]| v.iter().fold(q(1), |a, b| a.mul(b));
            assert_eq!(prod(&x), prod(&xp));
            assert_eq!(g_matrix(&u).unwrap(), one_row_matrix(&x));
        }
    }
}

#[test]
fn one_by_one_example() {
    let (x, y) = (vec![q(1), q(5)], vec![q(2), q(7)]);
    let (yp, xp) = one_by_one_r(&x, &y).unwrap();
    assert_eq!(xp, vec![qq(7, 8), qq(40, 7)]);
    assert_eq!(yp, vec![qq(16, 7), qq(49, 8)]);
    assert_eq!(xp[0].mul(&yp[0]), x[0].mul(&y[0]));
    let lhs = one_row_matrix(&x).mul(&one_row_matrix(&y)).unwrap();
    assert_eq!(lhs, one_row_matrix(&yp).mul(&one_row_matrix(&xp)).unwrap());
    let mut s = Sampler::new(12);
    for n in 2..=5 {
        let x: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
        let y: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
        let (yp, xp) = one_by_one_r(&x, &y).unwrap();
        let u = theta(&one_row_rect(&x).unwrap()).unwrap();
        let v = theta(&one_row_rect(&y).unwrap()).unwrap();
        let (vp, up) = geom_r(&u, &v).unwrap();
        assert!(theta(&one_row_rect(&yp).unwrap()).unwrap().same_point(&vp));
        assert!(theta(&one_row_rect(&xp).unwrap()).unwrap().same_point(&up));
    }
    assert!(one_by_one_r(&[q(1)], &[q(2)]).is_err());
}

#[test]
fn key_identity() {
    let mut s = Sampler::new(13);
    for (n, l, k) in [(4, 2, 2), (5, 2, 3), (4, 1, 3), (5, 3, 2)] {
        for _ in 0..4 {
            let (u, v) = pair(n, l, k, &mut s);
            for r in 1..=n as i64 {
                let (lhs, rhs) = key_identity_sides(&u, &v, r).unwrap();
                assert_eq!(lhs, rhs, "n={n} l={l} k={k} r={r}");
                if r < l as i64 {
                    assert!(lhs.is_zero());
                }
                let root = sign(k as i64 - 1).mul(&v.t);
                assert!(rhs.eval(&root).unwrap().is_zero());
            }
        }
    }
    let (u, v) = pair(4, 2, 2, &mut s);
    assert!(key_identity_sides(&u, &v, 0).is_err());
}

#[test]
fn tropical_examples() {
    let z = [1i64, 1, 1];
    let v = trop_eval_fn(&z, |e| {
        let num = e[0].mul(&e[0]).mul(&e[1]).add(&e[2]);
        let c = |v: i64| EpsRational::from_rational(q(v));
        let den = e[1].pow(5).add(&e[0].mul(&e[2]).mul(&c(8))).add(&c(4));
        num.div(&den)
    })
    .unwrap();
    assert_eq!(v, 1);
    let a = KRectangle::new(4, 1, vec![vec![2, 2, 6]], 7).unwrap();
    let b = KRectangle::new(4, 2, vec![vec![3, 4], vec![2, 2]], 5).unwrap();
    let (bp, ap) = trop_r(&a, &b).unwrap();
    assert_eq!(bp.flat(), vec![3, 5, 0, 4]);
    let counts: Vec<i64> = ap.to_tableau().unwrap().content();
    assert_eq!(counts, vec![2, 1, 1, 3]);
    assert_eq!(trop_e(&a, &b).unwrap(), 2);
}

fn rect(t: &Tableau) -> KRectangle {
    KRectangle::from_tableau(t).unwrap()
}

#[test]
fn tropical_r_is_combinatorial() {
    let n = 4;
    for (k1, k2) in [(1, 2), (2, 2)] {
        for l1 in 0..=2 {
            for l2 in 0..=2 {
                for t in enumerate_rect(n, k1, l1) {
                    for u in enumerate_rect(n, k2, l2) {
                        let (up, tp) = comb_r_oracle(&t, &u).unwrap();
                        let (bp, ap) = trop_r(&rect(&t), &rect(&u)).unwrap();
                        assert_eq!((bp.to_tableau().unwrap(), ap.to_tableau().unwrap()), (up, tp));
                        assert_eq!(trop_e(&rect(&t), &rect(&u)).unwrap(), comb_coenergy(&t, &u).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn rejects_mismatched_n() {
    let mut s = Sampler::new(14);
    let u = s.point(4, 2).unwrap();
    let v = s.point(5, 2).unwrap();
    assert!(geom_r(&u, &v).is_err());
    assert!(geom_e(&u, &v).is_err());
    let _ = RationalRect::<Rational>::new(4, 2, vec![vec![q(1), q(1)], vec![q(1), q(1)]], q(1)).unwrap();
}
