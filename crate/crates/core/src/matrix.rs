//! Dense matrices over a [`Ring`], with division-free determinants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::exactfield::{Field, Ring};

#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(GeomError::invalid("ragged matrix rows"));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based entry.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Mat<S>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(GeomError::invalid("matrix dimension mismatch"));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(GeomError::invalid("matrix dimension mismatch"));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Zero-based submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn first_cols(&self, k: usize) -> Self {
        Self::from_fn(self.rows, k, |i, j| self.get(i, j).clone())
    }

    /// Determinant by Laplace expansion over column subsets; uses no division.
    pub fn det(&self) -> Result<R> {
        if self.rows != self.cols {
            return Err(GeomError::invalid("determinant of a non-square matrix"));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(minor_det(self, &rows, &cols))
    }

    /// Zero-based minor with rows and columns taken in the given order.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<R> {
        if rows.len() != cols.len() {
            return Err(GeomError::invalid("minor needs equally many rows and columns"));
        }
        Ok(minor_det(self, rows, cols))
    }
}

fn minor_det<R: Ring>(m: &Mat<R>, rows: &[usize], cols: &[usize]) -> R {
    let k = rows.len();
    if k == 0 {
        return R::one();
    }
    if k == 1 {
        return m.get(rows[0], cols[0]).clone();
    }
    // dp[mask] = det of rows[0..|mask|] against the columns selected by mask
    let full = 1usize << k;
    let mut dp: Vec<Option<R>> = vec![None; full];
    dp[0] = Some(R::one());
    for mask in 1..full {
        let r = mask.count_ones() as usize - 1;
        let mut acc = R::zero();
        for j in 0..k {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = mask ^ (1 << j);
            let a = m.get(rows[r], cols[j]);
            if let (false, Some(d)) = (a.is_zero(), dp[sub].as_ref()) {
                if !d.is_zero() {
                    // columns of mask above j shift sign
                    let above = (mask >> (j + 1)).count_ones() as usize;
                    let term = a.mul(d);
                    acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
        }
        dp[mask] = Some(acc);
    }
    dp[full - 1].take().unwrap()
}

impl<F: Field> Mat<F> {
    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn row_echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("non-zero pivot");
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel, as the columns of the returned matrix.
    pub fn kernel(&self) -> Self {
        let (e, pivots) = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (fi, &f) in free.iter().enumerate() {
            out.set(f, fi, F::one());
            for (r, &p) in pivots.iter().enumerate() {
                out.set(p, fi, e.get(r, f).neg());
            }
        }
        out
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}
