//! JSON shapes read and written by the command line tool.

use geomr::exactfield::{Laurent, Rational};
use geomr::grassmann::XPoint;
use geomr::loopgroup::LoopMatrix;
use geomr::matrix::Mat;
use geomr::tableaux::{KRectangle, Tableau};
use geomr::{GeomError, Result};
use serde::{Deserialize, Serialize};

/// A tableau row, either as a digit string (`"11123"`, only for `n ≤ 9`) or as a list of entries.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum RowIn {
    Digits(String),
    Entries(Vec<u32>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauIn {
    pub n: u32,
    pub rows: Vec<RowIn>,
}

impl TableauIn {
    pub fn build(self) -> Result<Tableau> {
        let rows = self
            .rows
            .into_iter()
            .map(|r| match r {
                RowIn::Entries(v) => Ok(v),
                RowIn::Digits(s) => s
                    .chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| GeomError::invalid(format!("bad digit {c:?} in row {s:?}"))))
                    .collect(),
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(self.n, rows)
    }
}

#[derive(Serialize)]
pub struct TableauOut {
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
}

impl From<&Tableau> for TableauOut {
    fn from(t: &Tableau) -> Self {
        TableauOut { n: t.n, rows: t.rows.clone() }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RectIn {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "L")]
    pub l: i64,
    /// Optional; when present it must be the tableau the coordinates encode.
    #[serde(default)]
    pub tableau: Option<TableauIn>,
}

impl RectIn {
    pub fn build(self) -> Result<KRectangle> {
        let r = KRectangle::new(self.n, self.k, self.b, self.l)?;
        if let Some(t) = self.tableau {
            if t.build()? != r.to_tableau()? {
                return Err(GeomError::invalid("tableau does not match the rectangle coordinates"));
            }
        }
        Ok(r)
    }
}

/// `{"n", "k", "B", "L"}` plus the tableau it encodes.
#[derive(Serialize)]
pub struct RectOut {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "L")]
    pub l: i64,
    pub tableau: TableauOut,
}

impl RectOut {
    pub fn new(r: &KRectangle) -> Result<Self> {
        Ok(RectOut { n: r.n, k: r.k, b: r.b.clone(), l: r.l, tableau: (&r.to_tableau()?).into() })
    }
}

/// `{"n", "k", "mat": n×k array of "p/q", "t"}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub n: usize,
    pub k: usize,
    pub mat: Vec<Vec<Rational>>,
    pub t: Rational,
}

impl PointJson {
    pub fn build(self) -> Result<XPoint<Rational>> {
        if self.mat.len() != self.n || self.mat.iter().any(|r| r.len() != self.k) {
            return Err(GeomError::invalid(format!("mat must be {}×{}", self.n, self.k)));
        }
        XPoint::new(Mat::from_rows(self.mat)?, self.t)
    }

    /// The canonical spanning matrix of the subspace, so equal points print identically.
    pub fn from_point(p: &XPoint<Rational>) -> Self {
        PointJson { n: p.n(), k: p.k(), mat: p.subspace.canonical_matrix().to_rows(), t: p.t.clone() }
    }
}

/// Entries as coefficient vectors `[c_0, c_1, …]` of `λ^0, λ^1, …`.
pub fn loop_matrix_json(a: &LoopMatrix<Rational>) -> Result<Vec<Vec<Vec<Rational>>>> {
    a.to_rows()
        .iter()
        .map(|row| row.iter().map(coefficients).collect())
        .collect()
}

fn coefficients(p: &Laurent<Rational>) -> Result<Vec<Rational>> {
    match p.deg() {
        None => Ok(Vec::new()),
        Some(d) => {
            if p.ord().unwrap_or(0) < 0 {
                return Err(GeomError::invalid("matrix entry has negative powers of λ"));
            }
            Ok((0..=d).map(|e| p.coeff(e)).collect())
        }
    }
}
