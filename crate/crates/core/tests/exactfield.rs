mod common;

use common::{q, qq};
use geomr::exactfield::{eps_monomial, val, EpsRational, Field, Laurent, Rational, Ring};
use proptest::prelude::*;

fn eps_poly(offset: i64, c: &[i64]) -> EpsRational {
    EpsRational::from_laurent(Laurent::from_coeffs(offset, c.iter().map(|&v| q(v)).collect()))
}

#[test]
fn rational_examples() {
    assert_eq!(qq(1, 2).add(&qq(1, 3)), qq(5, 6));
    assert_eq!(qq(4, -6), qq(-2, 3));
    assert!(Rational::new(1, 0).is_err());
    assert!(q(0).inv().is_err());
}

#[test]
fn eps_examples() {
    let a = eps_poly(1, &[1, 1]);
    let b = eps_poly(3, &[2]);
    let c = a.div(&b).unwrap();
    let expect = EpsRational::from_parts(
        Laurent::from_coeffs(-2, vec![q(1), q(1)]),
        Laurent::constant(q(2)),
    )
    .unwrap();
    assert_eq!(c, expect);
    assert_eq!(val(&c).unwrap(), -2);
    assert!(eps_monomial(1).sub(&eps_monomial(1)).is_zero());
    assert_eq!(val(&eps_poly(2, &[1, 3])).unwrap(), 2);
    assert_eq!(val(&eps_poly(-1, &[1, 1])).unwrap(), -1);
    assert!(val(&EpsRational::zero()).is_err());
    assert_eq!(eps_monomial(0), EpsRational::one());
    assert_eq!(val(&eps_monomial(3)).unwrap(), 3);
    assert_eq!(val(&eps_monomial(-2)).unwrap(), -2);
}

#[test]
fn serde_forms() {
    let v: Rational = serde_json::from_str("\"-3/6\"").unwrap();
    assert_eq!(v, qq(-1, 2));
    let w: Rational = serde_json::from_str("7").unwrap();
    assert_eq!(serde_json::to_string(&w).unwrap(), "\"7/1\"");
    assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(p, d)| qq(p, d))
}

fn small_eps() -> impl Strategy<Value = EpsRational> {
    (
        -3i64..3,
        prop::collection::vec(-5i64..6, 1..4),
        prop::collection::vec(1i64..5, 1..3),
    )
        .prop_map(|(off, num, den)| {
            EpsRational::from_parts(
                Laurent::from_coeffs(off, num.iter().map(|&v| q(v)).collect()),
                Laurent::from_coeffs(0, den.iter().map(|&v| q(v)).collect()),
            )
            .unwrap()
        })
}

#[derive(Clone, Debug)]
enum Expr {
    Leaf(i64, i64, i64),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = (1i64..9, -3i64..4, 0i64..3).prop_map(|(c, a, extra)| Expr::Leaf(c, a, extra));
    leaf.prop_recursive(8, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
        ]
    })
}

/// Evaluates the tree and, independently, its tropicalization with `min`/`+`/`-`.
fn eval(e: &Expr) -> (EpsRational, i64) {
    match e {
        Expr::Leaf(c, a, extra) => {
            let base = eps_monomial(*a).mul(&EpsRational::from_i64(*c));
            let v = if *extra > 0 { base.add(&eps_monomial(*a + *extra)) } else { base };
            (v, *a)
        }
        Expr::Add(x, y) => {
            let (a, ta) = eval(x);
            let (b, tb) = eval(y);
            (a.add(&b), ta.min(tb))
        }
        Expr::Mul(x, y) => {
            let (a, ta) = eval(x);
            let (b, tb) = eval(y);
            (a.mul(&b), ta + tb)
        }
        Expr::Div(x, y) => {
            let (a, ta) = eval(x);
            let (b, tb) = eval(y);
            (a.div(&b).unwrap(), ta - tb)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn eps_field_axioms(a in small_eps(), b in small_eps(), c in small_eps()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn eps_canonical_form(a in small_eps(), b in small_eps(), c in small_eps()) {
        let lhs = a.mul(&b).add(&a.mul(&c));
        let rhs = a.mul(&b.add(&c));
        prop_assert_eq!(format!("{:?}", lhs), format!("{:?}", rhs));
    }

    #[test]
    fn eps_valuation_laws(a in small_eps(), b in small_eps()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(val(&a.mul(&b)).unwrap(), val(&a).unwrap() + val(&b).unwrap());
        let s = a.add(&b);
        if !s.is_zero() {
            prop_assert!(val(&s).unwrap() >= val(&a).unwrap().min(val(&b).unwrap()));
        }
    }

    #[test]
    fn positivity_preserved_and_tropicalizes(e in expr()) {
        let (v, trop) = eval(&e);
        prop_assert!(v.leading_coefficient().is_positive());
        prop_assert_eq!(val(&v).unwrap(), trop);
    }
}
