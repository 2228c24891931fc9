use std::collections::HashMap;

use super::{KRectangle, Tableau};
use crate::error::{GeomError, Result};

/// Schensted row insertion of `x` into `t`.
pub fn schensted_insert(t: &Tableau, x: u32) -> Tableau {
    let mut rows = t.trimmed().rows;
    let mut x = x;
    for row in rows.iter_mut() {
        match row.iter().position(|&v| v > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return Tableau { n: t.n, rows };
            }
        }
    }
    rows.push(vec![x]);
    Tableau { n: t.n, rows }
}

/// Tableau product `T * U`: row-insert the entries of `U` into `T`, bottom row
/// of `U` first, each row left to right.
pub fn product(t: &Tableau, u: &Tableau) -> Result<Tableau> {
    if t.n != u.n {
        return Err(GeomError::invalid("tableaux have different n"));
    }
    t.validate()?;
    u.validate()?;
    let mut out = t.trimmed();
    for row in u.rows.iter().rev() {
        for &x in row {
            out = schensted_insert(&out, x);
        }
    }
    Ok(out)
}

/// All tableaux of shape `L^k` with entries in `1..=n`, in lexicographic order of rows.
pub fn enumerate_rect(n: usize, k: usize, l: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cells = vec![vec![0u32; l]; k];
    fill(n as u32, k, l, 0, &mut cells, &mut out);
    out
}

fn fill(n: u32, k: usize, l: usize, pos: usize, cells: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if pos == k * l {
        out.push(Tableau { n, rows: cells.clone() });
        return;
    }
    let (i, j) = (pos / l, pos % l);
    let lo_row = if j > 0 { cells[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { cells[i - 1][j] + 1 } else { 1 };
    // leave room for the k-1-i strictly larger entries below
    let hi = n - (k - 1 - i) as u32;
    for v in lo_row.max(lo_col)..=hi {
        cells[i][j] = v;
        fill(n, k, l, pos + 1, cells, out);
    }
}

/// The tableau whose `i`-th row is filled with `i`.
pub fn highest_weight(n: usize, k: usize, l: usize) -> Tableau {
    Tableau { n: n as u32, rows: (1..=k).map(|i| vec![i as u32; l]).collect() }
}

/// Combinatorial R-matrix by exhaustive search: the unique `(U', T')` with the
/// shapes of `U` and `T` such that `U' * T' = T * U`.
pub fn comb_r_oracle(t: &Tableau, u: &Tableau) -> Result<(Tableau, Tableau)> {
    let (k1, l1) = t.rectangle().ok_or_else(|| GeomError::invalid("T is not rectangular"))?;
    let (k2, l2) = u.rectangle().ok_or_else(|| GeomError::invalid("U is not rectangular"))?;
    let n = t.n as usize;
    let target = product(t, u)?;
    let total = target.content();
    let mut by_content: HashMap<Vec<i64>, Vec<Tableau>> = HashMap::new();
    for cand in enumerate_rect(n, k1, l1) {
        by_content.entry(cand.content()).or_default().push(cand);
    }
    let mut found = Vec::new();
    for up in enumerate_rect(n, k2, l2) {
        let rest: Vec<i64> = total.iter().zip(up.content()).map(|(a, b)| a - b).collect();
        if rest.iter().any(|&v| v < 0) {
            continue;
        }
        for tp in by_content.get(&rest).into_iter().flatten() {
            if product(&up, tp)? == target {
                found.push((up.clone(), tp.clone()));
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        m => Err(GeomError::degenerate(format!("expected a unique factorization, found {m}"))),
    }
}

/// Number of boxes of `T * U` outside its first `max(k1, k2)` rows.
pub fn comb_coenergy(t: &Tableau, u: &Tableau) -> Result<i64> {
    let (k1, _) = t.rectangle().ok_or_else(|| GeomError::invalid("T is not rectangular"))?;
    let (k2, _) = u.rectangle().ok_or_else(|| GeomError::invalid("U is not rectangular"))?;
    let p = product(t, u)?;
    Ok(p.rows.iter().skip(k1.max(k2)).map(|r| r.len() as i64).sum())
}

/// Piecewise-linear R-matrix on one-row tableaux given by their contents `a`
/// (first factor) and `b` (second factor); returns `(b', a')`.
pub fn one_row_comb_r(a: &[i64], b: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    let n = a.len();
    if b.len() != n || n < 2 {
        return Err(GeomError::invalid("contents must have equal length n ≥ 2"));
    }
    let at = |j: usize| a[j % n];
    let bt = |j: usize| b[j % n];
    let kappa: Vec<i64> = (0..n)
        .map(|j| {
            (0..n)
                .map(|r| (j..j + r).map(bt).sum::<i64>() + (j + r + 1..j + n).map(at).sum::<i64>())
                .min()
                .unwrap()
        })
        .collect();
    let bp = (0..n).map(|j| b[j] + kappa[(j + 1) % n] - kappa[j]).collect();
    let ap = (0..n).map(|j| a[j] + kappa[j] - kappa[(j + 1) % n]).collect();
    Ok((bp, ap))
}

impl KRectangle {
    /// Number of tableaux of shape `L^k` with entries at most `n`.
    pub fn count(n: usize, k: usize, l: usize) -> usize {
        enumerate_rect(n, k, l).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(n: u32, rows: &[&str]) -> Tableau {
        Tableau::from_digit_rows(n, rows).unwrap()
    }

    #[test]
    fn product_example() {
        let t = tab(4, &["1133334"]);
        let u = tab(4, &["11123", "22444"]);
        assert_eq!(product(&t, &u).unwrap(), tab(4, &["1111123444", "22334", "33"]));
    }

    #[test]
    fn oracle_example() {
        let t = tab(4, &["1133334"]);
        let u = tab(4, &["11123", "22444"]);
        let (up, tp) = comb_r_oracle(&t, &u).unwrap();
        assert_eq!(up, tab(4, &["11122", "33334"]));
        assert_eq!(tp, tab(4, &["1123444"]));
        assert_eq!(comb_coenergy(&t, &u).unwrap(), 2);
    }

    #[test]
    fn one_row_example() {
        let (bp, ap) = one_row_comb_r(&[1, 5], &[2, 7]).unwrap();
        assert_eq!(bp, vec![1, 8]);
        assert_eq!(ap, vec![2, 4]);
    }

    #[test]
    fn rectangle_counts() {
        // hook-content formula values
        assert_eq!(enumerate_rect(4, 2, 2).len(), 20);
        assert_eq!(enumerate_rect(3, 1, 3).len(), 10);
        assert_eq!(enumerate_rect(5, 2, 1).len(), 10);
        assert_eq!(enumerate_rect(4, 2, 0).len(), 1);
    }
}
