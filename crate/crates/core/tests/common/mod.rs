#![allow(dead_code)]

use geomr::exactfield::Rational;
use geomr::matrix::Mat;

pub fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

pub fn qq(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

pub fn qmat(rows: &[&[i64]]) -> Mat<Rational> {
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
}
