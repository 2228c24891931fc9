use serde::{Deserialize, Serialize};

use super::Tableau;
use crate::error::{GeomError, Result};

/// Order in which the cells of a tableau are read to form its word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReadingOrder {
    /// Columns right to left, each column top to bottom.
    FarEastern,
    /// Rows bottom to top, each row left to right.
    Row,
}

/// The reading order that matches the tropicalized crystal operators.
pub const DEFAULT_READING: ReadingOrder = ReadingOrder::Row;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrystalOp {
    E,
    F,
    Eps,
    Phi,
    Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CrystalValue {
    Tableau(Option<Tableau>),
    Int(i64),
    Weight(Vec<i64>),
}

/// Cells `(row, col)` in reading order.
pub fn reading_word(t: &Tableau, order: ReadingOrder) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    match order {
        ReadingOrder::Row => {
            for r in (0..t.rows.len()).rev() {
                for c in 0..t.rows[r].len() {
                    cells.push((r, c));
                }
            }
        }
        ReadingOrder::FarEastern => {
            let width = t.rows.first().map_or(0, |r| r.len());
            for c in (0..width).rev() {
                for r in 0..t.rows.len() {
                    if c < t.rows[r].len() {
                        cells.push((r, c));
                    }
                }
            }
        }
    }
    cells
}

/// Unmatched cells after cancelling each `i+1` against a later `i`:
/// returns (unmatched `i`s, unmatched `i+1`s), both in reading order.
fn bracket(t: &Tableau, i: u32, order: ReadingOrder) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut lows = Vec::new();
    let mut highs: Vec<(usize, usize)> = Vec::new();
    for (r, c) in reading_word(t, order) {
        let v = t.rows[r][c];
        if v == i + 1 {
            highs.push((r, c));
        } else if v == i && highs.pop().is_none() {
            lows.push((r, c));
        }
    }
    (lows, highs)
}

fn check_index(t: &Tableau, i: u32) -> Result<()> {
    if i == 0 || i >= t.n {
        return Err(GeomError::invalid(format!("classical index {i} outside 1..{}", t.n)));
    }
    t.validate()
}

pub fn eps_classical(t: &Tableau, i: u32, order: ReadingOrder) -> Result<i64> {
    check_index(t, i)?;
    Ok(bracket(t, i, order).1.len() as i64)
}

pub fn phi_classical(t: &Tableau, i: u32, order: ReadingOrder) -> Result<i64> {
    check_index(t, i)?;
    Ok(bracket(t, i, order).0.len() as i64)
}

/// Change the leftmost unmatched `i+1` to `i`; `None` when no such entry exists.
pub fn e_classical(t: &Tableau, i: u32, order: ReadingOrder) -> Result<Option<Tableau>> {
    check_index(t, i)?;
    let (_, highs) = bracket(t, i, order);
    Ok(highs.first().map(|&(r, c)| {
        let mut out = t.clone();
        out.rows[r][c] = i;
        out
    }))
}

/// Change the rightmost unmatched `i` to `i+1`; `None` when no such entry exists.
pub fn f_classical(t: &Tableau, i: u32, order: ReadingOrder) -> Result<Option<Tableau>> {
    check_index(t, i)?;
    let (lows, _) = bracket(t, i, order);
    Ok(lows.last().map(|&(r, c)| {
        let mut out = t.clone();
        out.rows[r][c] = i + 1;
        out
    }))
}

/// Promotion on a rectangular tableau: delete the `n`s, slide the rest to the
/// south-east, add 1 to every entry and fill the vacated cells with 1.
pub fn promotion(t: &Tableau) -> Result<Tableau> {
    t.validate()?;
    let (k, l) = t.rectangle().ok_or_else(|| GeomError::invalid("promotion needs a rectangle"))?;
    let n = t.n;
    let mut grid: Vec<Vec<Option<u32>>> =
        t.rows.iter().map(|r| r.iter().map(|&v| (v < n).then_some(v)).collect()).collect();
    if k == 0 || l == 0 {
        return Ok(t.clone());
    }
    let holes: Vec<usize> = (0..l).filter(|&c| grid[k - 1][c].is_none()).collect();
    for c0 in holes {
        let (mut r, mut c) = (k - 1, c0);
        loop {
            let north = if r > 0 { grid[r - 1][c] } else { None };
            let west = if c > 0 { grid[r][c - 1] } else { None };
            match (north, west) {
                (None, None) => break,
                (Some(a), w) if w.map_or(true, |b| a >= b) => {
                    grid[r][c] = Some(a);
                    grid[r - 1][c] = None;
                    r -= 1;
                }
                (_, Some(b)) => {
                    grid[r][c] = Some(b);
                    grid[r][c - 1] = None;
                    c -= 1;
                }
                _ => unreachable!(),
            }
        }
    }
    let rows = grid.into_iter().map(|r| r.into_iter().map(|v| v.map_or(1, |x| x + 1)).collect()).collect();
    Tableau::new(n, rows)
}

/// Inverse of [`promotion`].
pub fn promotion_inverse(t: &Tableau) -> Result<Tableau> {
    t.validate()?;
    let (k, l) = t.rectangle().ok_or_else(|| GeomError::invalid("promotion needs a rectangle"))?;
    let n = t.n;
    let mut grid: Vec<Vec<Option<u32>>> =
        t.rows.iter().map(|r| r.iter().map(|&v| (v > 1).then_some(v)).collect()).collect();
    if k == 0 || l == 0 {
        return Ok(t.clone());
    }
    let holes: Vec<usize> = (0..l).filter(|&c| grid[0][c].is_none()).rev().collect();
    for c0 in holes {
        let (mut r, mut c) = (0, c0);
        loop {
            let south = if r + 1 < k { grid[r + 1][c] } else { None };
            let east = if c + 1 < l { grid[r][c + 1] } else { None };
            match (south, east) {
                (None, None) => break,
                (Some(a), e) if e.map_or(true, |b| a <= b) => {
                    grid[r][c] = Some(a);
                    grid[r + 1][c] = None;
                    r += 1;
                }
                (_, Some(b)) => {
                    grid[r][c] = Some(b);
                    grid[r][c + 1] = None;
                    c += 1;
                }
                _ => unreachable!(),
            }
        }
    }
    let rows = grid.into_iter().map(|r| r.into_iter().map(|v| v.map_or(n, |x| x - 1)).collect()).collect();
    Tableau::new(n, rows)
}

/// Schützenberger involution on a rectangle: rotate by 180° and replace `i` by `n+1-i`.
pub fn schutzenberger(t: &Tableau) -> Result<Tableau> {
    t.validate()?;
    t.rectangle().ok_or_else(|| GeomError::invalid("evacuation shortcut needs a rectangle"))?;
    let rows = t.rows.iter().rev().map(|r| r.iter().rev().map(|&v| t.n + 1 - v).collect()).collect();
    Tableau::new(t.n, rows)
}

/// Replace each column of a `k × L` rectangle by its complement in `[n]` and
/// reverse the order of the columns; the result has shape `L^{n-k}`.
pub fn column_complement(t: &Tableau) -> Result<Tableau> {
    t.validate()?;
    let (k, l) = t.rectangle().ok_or_else(|| GeomError::invalid("column complement needs a rectangle"))?;
    let n = t.n as usize;
    let mut rows = vec![Vec::with_capacity(l); n - k];
    for c in (0..l).rev() {
        let col: Vec<u32> = (0..k).map(|r| t.rows[r][c]).collect();
        let comp: Vec<u32> = (1..=t.n).filter(|v| !col.contains(v)).collect();
        for (r, v) in comp.into_iter().enumerate() {
            rows[r].push(v);
        }
    }
    Tableau::new(t.n, rows)
}

/// `ẽ_0 = pr⁻¹ ∘ ẽ_1 ∘ pr`.
pub fn e_zero(t: &Tableau, order: ReadingOrder) -> Result<Option<Tableau>> {
    match e_classical(&promotion(t)?, 1, order)? {
        Some(s) => Ok(Some(promotion_inverse(&s)?)),
        None => Ok(None),
    }
}

fn f_zero(t: &Tableau, order: ReadingOrder) -> Result<Option<Tableau>> {
    match f_classical(&promotion(t)?, 1, order)? {
        Some(s) => Ok(Some(promotion_inverse(&s)?)),
        None => Ok(None),
    }
}

/// Affine crystal data on a single tableau; `i = 0` goes through promotion.
pub fn crystal_classical(t: &Tableau, i: u32, op: CrystalOp, order: ReadingOrder) -> Result<CrystalValue> {
    if op == CrystalOp::Weight {
        t.validate()?;
        return Ok(CrystalValue::Weight(t.content()));
    }
    if i >= t.n {
        return Err(GeomError::invalid(format!("index {i} outside 0..{}", t.n)));
    }
    Ok(match (op, i) {
        (CrystalOp::E, 0) => CrystalValue::Tableau(e_zero(t, order)?),
        (CrystalOp::F, 0) => CrystalValue::Tableau(f_zero(t, order)?),
        (CrystalOp::Eps, 0) => CrystalValue::Int(eps_classical(&promotion(t)?, 1, order)?),
        (CrystalOp::Phi, 0) => CrystalValue::Int(phi_classical(&promotion(t)?, 1, order)?),
        (CrystalOp::E, _) => CrystalValue::Tableau(e_classical(t, i, order)?),
        (CrystalOp::F, _) => CrystalValue::Tableau(f_classical(t, i, order)?),
        (CrystalOp::Eps, _) => CrystalValue::Int(eps_classical(t, i, order)?),
        (CrystalOp::Phi, _) => CrystalValue::Int(phi_classical(t, i, order)?),
        (CrystalOp::Weight, _) => unreachable!(),
    })
}

fn single_int(t: &Tableau, i: u32, op: CrystalOp) -> Result<i64> {
    match crystal_classical(t, i, op, DEFAULT_READING)? {
        CrystalValue::Int(v) => Ok(v),
        _ => unreachable!(),
    }
}

fn single_e(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    match crystal_classical(t, i, CrystalOp::E, DEFAULT_READING)? {
        CrystalValue::Tableau(v) => Ok(v),
        _ => unreachable!(),
    }
}

/// `(ε_i, φ_i)` of `a_1 ⊗ … ⊗ a_d`, grouping from the left.
fn tensor_data(i: u32, factors: &[Tableau]) -> Result<(i64, i64)> {
    let (last, init) = factors.split_last().ok_or_else(|| GeomError::invalid("empty tensor product"))?;
    let eb = single_int(last, i, CrystalOp::Eps)?;
    let pb = single_int(last, i, CrystalOp::Phi)?;
    if init.is_empty() {
        return Ok((eb, pb));
    }
    let (ea, pa) = tensor_data(i, init)?;
    Ok((eb + (ea - pb).max(0), pa + (pb - ea).max(0)))
}

pub fn tensor_eps(i: u32, factors: &[Tableau]) -> Result<i64> {
    Ok(tensor_data(i, factors)?.0)
}

pub fn tensor_phi(i: u32, factors: &[Tableau]) -> Result<i64> {
    Ok(tensor_data(i, factors)?.1)
}

/// `ẽ_i` on a tensor product: acts on the left part when `ε_i(left) > φ_i(right)`.
pub fn tensor_e(i: u32, factors: &[Tableau]) -> Result<Option<Vec<Tableau>>> {
    let (last, init) = factors.split_last().ok_or_else(|| GeomError::invalid("empty tensor product"))?;
    if init.is_empty() {
        return Ok(single_e(last, i)?.map(|t| vec![t]));
    }
    let (ea, _) = tensor_data(i, init)?;
    let pb = single_int(last, i, CrystalOp::Phi)?;
    if ea > pb {
        Ok(tensor_e(i, init)?.map(|mut v| {
            v.push(last.clone());
            v
        }))
    } else {
        Ok(single_e(last, i)?.map(|t| {
            let mut v = init.to_vec();
            v.push(t);
            v
        }))
    }
}

/// `f̃_i` on a tensor product: acts on the left part when `ε_i(left) ≥ φ_i(right)`.
pub fn tensor_f(i: u32, factors: &[Tableau]) -> Result<Option<Vec<Tableau>>> {
    let (last, init) = factors.split_last().ok_or_else(|| GeomError::invalid("empty tensor product"))?;
    if init.is_empty() {
        return Ok(single_f(last, i)?.map(|t| vec![t]));
    }
    let (ea, _) = tensor_data(i, init)?;
    let pb = single_int(last, i, CrystalOp::Phi)?;
    if ea >= pb {
        Ok(tensor_f(i, init)?.map(|mut v| {
            v.push(last.clone());
            v
        }))
    } else {
        Ok(single_f(last, i)?.map(|t| {
            let mut v = init.to_vec();
            v.push(t);
            v
        }))
    }
}

fn single_f(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    match crystal_classical(t, i, CrystalOp::F, DEFAULT_READING)? {
        CrystalValue::Tableau(v) => Ok(v),
        _ => unreachable!(),
    }
}
