//! Semistandard tableaux, Gelfand–Tsetlin patterns and k-rectangles.

mod crystal;
mod product;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

pub use crystal::{
    crystal_classical, e_classical, e_zero, eps_classical, f_classical, phi_classical, promotion,
    promotion_inverse, reading_word, schutzenberger, column_complement, tensor_e, tensor_eps,
    tensor_f, tensor_phi, CrystalOp, CrystalValue, ReadingOrder, DEFAULT_READING,
};
pub use product::{
    comb_r_oracle, comb_coenergy, enumerate_rect, highest_weight, one_row_comb_r, product,
    schensted_insert,
};

/// Semistandard tableau with entries in `1..=n`, stored row by row (English notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(n: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { n, rows };
        t.validate()?;
        Ok(t)
    }

    /// Parse rows written as digit strings, e.g. `["11123", "22444"]`.
    pub fn from_digit_rows(n: u32, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| GeomError::invalid(format!("bad digit {c:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(n, rows)
    }

    /// Rows must be weakly increasing, columns strictly increasing, lengths weakly
    /// decreasing, entries in `1..=n`.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(GeomError::invalid("n must be positive"));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 && row.len() > self.rows[i - 1].len() {
                return Err(GeomError::invalid("row lengths must weakly decrease"));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > self.n {
                    return Err(GeomError::invalid(format!("entry {v} outside 1..={}", self.n)));
                }
                if j > 0 && row[j - 1] > v {
                    return Err(GeomError::invalid("rows must weakly increase"));
                }
                if i > 0 && self.rows[i - 1][j] >= v {
                    return Err(GeomError::invalid("columns must strictly increase"));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Number of `j`s for each `j` in `1..=n`.
    pub fn content(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.n as usize];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    /// `Some((k, L))` when the shape is a `k × L` rectangle.
    pub fn rectangle(&self) -> Option<(usize, usize)> {
        let l = self.rows.first().map_or(0, |r| r.len());
        self.rows.iter().all(|r| r.len() == l).then_some((self.rows.len(), l))
    }

    /// Drop empty trailing rows.
    pub fn trimmed(&self) -> Tableau {
        let mut rows = self.rows.clone();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Tableau { n: self.n, rows }
    }

    pub fn to_digit_rows(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
    }
}

/// Gelfand–Tsetlin pattern; `rows[j-1]` is `(A_{1j}, …, A_{jj})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GtPattern {
    pub rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `A_{ij}` with one-based indices; `A_{i,i-1} = 0`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        if j < i {
            0
        } else {
            self.rows[j - 1][i - 1]
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (j, row) in self.rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Err(GeomError::invalid("pattern row j must have j entries"));
            }
            if row.iter().any(|&v| v < 0) {
                return Err(GeomError::invalid("pattern entries must be non-negative"));
            }
        }
        let n = self.n();
        for j in 1..n {
            for i in 1..=j {
                if !(self.a(i, j + 1) >= self.a(i, j) && self.a(i, j) >= self.a(i + 1, j + 1)) {
                    return Err(GeomError::invalid(format!("interlacing fails at ({i},{j})")));
                }
            }
        }
        Ok(())
    }
}

/// Tableau whose row `i` holds `A_{ij} - A_{i,j-1}` copies of `j`.
pub fn gt_to_tableau(p: &GtPattern) -> Result<Tableau> {
    p.validate()?;
    let n = p.n();
    let rows = (1..=n)
        .map(|i| {
            let mut row = Vec::new();
            for j in i..=n {
                let m = p.a(i, j) - p.a(i, j - 1);
                row.extend(std::iter::repeat(j as u32).take(m as usize));
            }
            row
        })
        .collect();
    Ok(Tableau::new(n as u32, rows)?.trimmed())
}

/// Inverse of [`gt_to_tableau`]: `A_{ij}` is the number of entries `≤ j` in row `i`.
pub fn tableau_to_gt(t: &Tableau) -> Result<GtPattern> {
    t.validate()?;
    let n = t.n as usize;
    if t.rows.iter().filter(|r| !r.is_empty()).count() > n {
        return Err(GeomError::invalid("more than n non-empty rows"));
    }
    let rows = (1..=n)
        .map(|j| {
            (1..=j)
                .map(|i| t.rows.get(i - 1).map_or(0, |r| r.iter().filter(|&&v| v as usize <= j).count() as i64))
                .collect()
        })
        .collect();
    Ok(GtPattern { rows })
}

/// GT coordinates of a tableau of shape `L^k`: `B[i-1][j-i]` is `B_{ij}` for
/// `i ≤ j ≤ i+n-k-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KRectangle {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "L")]
    pub l: i64,
}

impl KRectangle {
    pub fn new(n: usize, k: usize, b: Vec<Vec<i64>>, l: i64) -> Result<Self> {
        let r = KRectangle { n, k, b, l };
        r.validate()?;
        Ok(r)
    }

    /// Completion `A_{ij}`: `B_{ij}` on the index region, `L` to its right, `0` to its left.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        if j < i {
            0
        } else if j > i + self.n - self.k - 1 {
            self.l
        } else {
            self.b[i - 1][j - i]
        }
    }

    /// `B_{ij}` with one-based indices, `B_{i,i-1} = 0` and `B_{i,i+n-k} = L`.
    pub fn big_b(&self, i: usize, j: usize) -> i64 {
        self.a(i, j)
    }

    /// `b_{ij} = B_{ij} - B_{i,j-1}`, the number of `j`s in row `i`.
    pub fn small_b(&self, i: usize, j: usize) -> i64 {
        self.a(i, j) - self.a(i, j - 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k >= self.n {
            return Err(GeomError::invalid(format!("need 1 ≤ k ≤ n-1, got k={} n={}", self.k, self.n)));
        }
        if self.b.len() != self.k || self.b.iter().any(|r| r.len() != self.n - self.k) {
            return Err(GeomError::invalid("B must have k rows of length n-k"));
        }
        if self.l < 0 {
            return Err(GeomError::invalid("L must be non-negative"));
        }
        self.pattern().validate()
    }

    /// Full GT pattern of the completion.
    pub fn pattern(&self) -> GtPattern {
        let rows = (1..=self.n).map(|j| (1..=j).map(|i| if i <= self.k { self.a(i, j) } else { 0 }).collect()).collect();
        GtPattern { rows }
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        let t = gt_to_tableau(&self.pattern())?;
        let mut rows = t.rows;
        rows.resize(self.k, Vec::new());
        Ok(Tableau { n: self.n as u32, rows })
    }

    /// Coordinates of a `k × L` rectangular tableau.
    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        t.validate()?;
        let (k, l) = t.rectangle().ok_or_else(|| GeomError::invalid("tableau is not rectangular"))?;
        let n = t.n as usize;
        let b = (1..=k)
            .map(|i| (i..i + n - k).map(|j| t.rows[i - 1].iter().filter(|&&v| v as usize <= j).count() as i64).collect())
            .collect();
        KRectangle::new(n, k, b, l as i64)
    }

    /// Flat list `(B_{11}, B_{12}, …, B_{k,k+n-k-1})` in row order.
    pub fn flat(&self) -> Vec<i64> {
        self.b.iter().flatten().copied().collect()
    }
}
