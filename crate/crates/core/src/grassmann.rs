//! Plücker coordinates, the tableau matrices `Φ`, the parametrization `Θ` and
//! planar networks.

use std::collections::HashMap;

use crate::error::{GeomError, Result};
use crate::exactfield::{Field, Ring};
use crate::matrix::Mat;

/// Integers `a..=b` (empty when `b < a`).
pub fn interval(a: i64, b: i64) -> Vec<i64> {
    (a..=b).collect()
}

/// Bitmask (bit `i-1` for `i ∈ [n]`) of a set of integers reduced mod `n`, and
/// the number of distinct residues.
pub fn subset_mask(n: usize, set: &[i64]) -> (u64, usize) {
    let mut mask = 0u64;
    for &i in set {
        mask |= 1 << ((i - 1).rem_euclid(n as i64));
    }
    (mask, mask.count_ones() as usize)
}

/// Elements of `[n]` in a mask, ascending.
pub fn mask_elements(mask: u64) -> Vec<i64> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Residues in `[n]` of a set, sorted and deduplicated.
pub fn reduce_set(n: usize, set: &[i64]) -> Vec<i64> {
    mask_elements(subset_mask(n, set).0)
}

/// `w0(j) = n + 1 - j`, applied after reducing mod `n`.
pub fn w0(n: usize, set: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = reduce_set(n, set).into_iter().map(|j| n as i64 + 1 - j).collect();
    out.sort();
    out
}

pub fn complement(n: usize, set: &[i64]) -> Vec<i64> {
    let (mask, _) = subset_mask(n, set);
    (1..=n as i64).filter(|j| mask >> (j - 1) & 1 == 0).collect()
}

/// `J* = w0([n] \ J)`.
pub fn star(n: usize, set: &[i64]) -> Vec<i64> {
    w0(n, &complement(n, set))
}

/// `J - c`, reduced mod `n`.
pub fn shift_by(n: usize, set: &[i64], c: i64) -> Vec<i64> {
    reduce_set(n, &set.iter().map(|j| j - c).collect::<Vec<_>>())
}

/// Number of maximal cyclic intervals of a subset of `[n]` (0 for the empty set,
/// 1 for `[n]`).
pub fn cyclic_interval_count(n: usize, set: &[i64]) -> usize {
    let (mask, size) = subset_mask(n, set);
    if size == 0 {
        return 0;
    }
    if size == n {
        return 1;
    }
    (1..=n as i64)
        .filter(|&j| {
            let prev = (j - 2).rem_euclid(n as i64);
            mask >> (j - 1) & 1 == 1 && mask >> prev & 1 == 0
        })
        .count()
}

/// All `k`-subsets of `[n]`, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: i64, n: i64, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n as i64, k, &mut cur, &mut out);
    out
}

/// A `k`-dimensional subspace of `F^n`, given by a spanning `n × k` matrix, with
/// all Plücker coordinates precomputed.
#[derive(Clone, Debug)]
pub struct GrassmannPoint<F> {
    n: usize,
    k: usize,
    mat: Mat<F>,
    pluckers: Vec<F>,
}

impl<F: Field> GrassmannPoint<F> {
    /// Fails with `DegenerateInput` if the columns are dependent.
    pub fn new(mat: Mat<F>) -> Result<Self> {
        let (n, k) = (mat.rows(), mat.cols());
        if k == 0 || k >= n {
            return Err(GeomError::invalid(format!("need 1 ≤ k ≤ n-1, got {n}×{k}")));
        }
        if n > 20 {
            return Err(GeomError::invalid("n too large"));
        }
        let pluckers = all_maximal_minors(&mat);
        if pluckers.iter().all(|p| p.is_zero()) {
            return Err(GeomError::degenerate("matrix does not have full column rank"));
        }
        Ok(GrassmannPoint { n, k, mat, pluckers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.mat
    }

    /// `P_I`: indices are reduced mod `n`; zero unless `I` has `k` distinct residues.
    pub fn plucker(&self, set: &[i64]) -> F {
        let (mask, size) = subset_mask(self.n, set);
        if size != self.k {
            return F::zero();
        }
        self.pluckers[mask as usize].clone()
    }

    /// Plücker vector in lexicographic order of `k`-subsets.
    pub fn plucker_vector(&self) -> Vec<F> {
        k_subsets(self.n, self.k).iter().map(|s| self.plucker(s)).collect()
    }

    /// Plücker vector scaled so that its first non-zero entry is 1.
    pub fn normalized_pluckers(&self) -> Vec<F> {
        let v = self.plucker_vector();
        let first = v.iter().find(|p| !p.is_zero()).cloned().expect("non-zero Plücker vector");
        let inv = first.inv().expect("non-zero");
        v.iter().map(|p| p.mul(&inv)).collect()
    }

    /// Equality as subspaces.
    pub fn same_subspace(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.normalized_pluckers() == other.normalized_pluckers()
    }

    /// All Plücker coordinates strictly positive.
    pub fn is_totally_positive(&self) -> bool {
        k_subsets(self.n, self.k).iter().all(|s| self.plucker(s).is_positive())
    }

    /// Column-reduced representative: the reduced column echelon form.
    pub fn canonical_matrix(&self) -> Mat<F> {
        let (e, _) = self.mat.transpose().row_echelon();
        e.transpose()
    }
}

/// Maximal minors of an `n × k` matrix, indexed by row mask.
fn all_maximal_minors<F: Ring>(m: &Mat<F>) -> Vec<F> {
    let (n, k) = (m.rows(), m.cols());
    let size = 1usize << n;
    let mut cur: Vec<F> = vec![F::zero(); size];
    cur[0] = F::one();
    let mut masks_by_count: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0..size {
        masks_by_count[mask.count_ones() as usize].push(mask);
    }
    for c in 1..=k {
        let mut next: Vec<F> = vec![F::zero(); size];
        for &mask in &masks_by_count[c] {
            let mut acc = F::zero();
            for i in 0..n {
                if mask >> i & 1 == 0 {
                    continue;
                }
                let a = m.get(i, c - 1);
                let d = &cur[mask ^ (1 << i)];
                if a.is_zero() || d.is_zero() {
                    continue;
                }
                let above = (mask >> (i + 1)).count_ones();
                let term = a.mul(d);
                acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            next[mask] = acc;
        }
        cur = next;
    }
    cur
}

/// A point `N|t` of `X_k = Gr(k, n) × F^×`.
#[derive(Clone, Debug)]
pub struct XPoint<F> {
    pub subspace: GrassmannPoint<F>,
    pub t: F,
}

impl<F: Field> XPoint<F> {
    pub fn new(mat: Mat<F>, t: F) -> Result<Self> {
        if t.is_zero() {
            return Err(GeomError::degenerate("t must be non-zero"));
        }
        Ok(XPoint { subspace: GrassmannPoint::new(mat)?, t })
    }

    pub fn n(&self) -> usize {
        self.subspace.n()
    }

    pub fn k(&self) -> usize {
        self.subspace.k()
    }

    pub fn plucker(&self, set: &[i64]) -> F {
        self.subspace.plucker(set)
    }

    pub fn same_point(&self, other: &Self) -> bool {
        self.t == other.t && self.subspace.same_subspace(&other.subspace)
    }
}

/// `M_[a,b](z_a, …, z_b)`: `z_i` on the diagonal for `i ∈ [a,b]`, 1 elsewhere on
/// the diagonal, and `E_{i,i-1} = 1` for `i ∈ [a+1, b]`. Indices are one-based.
pub fn chevalley_matrix<F: Ring>(n: usize, a: usize, b: usize, z: &[F]) -> Result<Mat<F>> {
    if a < 1 || b > n || a > b || z.len() != b - a + 1 {
        return Err(GeomError::invalid(format!("bad range [{a},{b}] for n={n} with {} values", z.len())));
    }
    let mut m = Mat::identity(n);
    for i in a..=b {
        m.set(i - 1, i - 1, z[i - a].clone());
        if i > a {
            m.set(i - 1, i - 2, F::one());
        }
    }
    Ok(m)
}

/// Rational coordinates of a `k`-row rectangle: `x[i-1][j-i] = X_{ij}` for
/// `1 ≤ i ≤ k`, `i ≤ j ≤ i+n-k-1`, together with `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRect<F> {
    pub n: usize,
    pub k: usize,
    pub x: Vec<Vec<F>>,
    pub t: F,
}

impl<F: Field> RationalRect<F> {
    pub fn new(n: usize, k: usize, x: Vec<Vec<F>>, t: F) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(GeomError::invalid(format!("need 1 ≤ k ≤ n-1, got k={k} n={n}")));
        }
        if x.len() != k || x.iter().any(|r| r.len() != n - k) {
            return Err(GeomError::invalid("X must have k rows of length n-k"));
        }
        if t.is_zero() || x.iter().flatten().any(|v| v.is_zero()) {
            return Err(GeomError::degenerate("rectangle coordinates must be non-zero"));
        }
        Ok(RationalRect { n, k, x, t })
    }

    /// `X_{ij}` with `X_{i,i-1} = 1` and `X_{i,i+n-k} = t`.
    pub fn big_x(&self, i: usize, j: usize) -> F {
        if j + 1 == i {
            F::one()
        } else if j == i + self.n - self.k {
            self.t.clone()
        } else {
            self.x[i - 1][j - i].clone()
        }
    }

    /// `x_{ij} = X_{ij} / X_{i,j-1}` for `i ≤ j ≤ i+n-k`.
    pub fn small_x(&self, i: usize, j: usize) -> F {
        self.big_x(i, j).div(&self.big_x(i, j - 1)).expect("non-zero coordinates")
    }
}

/// `Φ_k(X, t) = M_[k,k+n-k](x_k·) ⋯ M_[1,1+n-k](x_1·)` for a `k`-row rectangle.
pub fn phi_matrix<F: Field>(rect: &RationalRect<F>) -> Result<Mat<F>> {
    let (n, k) = (rect.n, rect.k);
    let mut acc = Mat::identity(n);
    for i in (1..=k).rev() {
        let z: Vec<F> = (i..=i + n - k).map(|j| rect.small_x(i, j)).collect();
        acc = acc.mul(&chevalley_matrix(n, i, i + n - k, &z)?)?;
    }
    Ok(acc)
}

/// `Θ_{n-k}`: a `k`-row rectangle goes to the span of the first `n-k` columns of `Φ_k`.
pub fn theta<F: Field>(rect: &RationalRect<F>) -> Result<XPoint<F>> {
    let phi = phi_matrix(rect)?;
    XPoint::new(phi.first_cols(rect.n - rect.k), rect.t.clone())
}

/// Basic subset `I_{i,j} = [i,j] ∪ [n-m+j-i+2, n]` for a point of `X_m`.
pub fn basic_subset(n: usize, m: usize, i: i64, j: i64) -> Vec<i64> {
    let (n, m) = (n as i64, m as i64);
    let mut s = interval(i, j);
    s.extend(interval(n - m + j - i + 2, n));
    s
}

/// `Θ^{-1}`: `X_{ij} = P_{I_{i,j}} / P_{I_{i+1,j}}`; a point of `X_m` gives an
/// `(n-m)`-row rectangle.
pub fn theta_inverse<F: Field>(p: &XPoint<F>) -> Result<RationalRect<F>> {
    let (n, m) = (p.n(), p.k());
    let k = n - m;
    let mut x = Vec::with_capacity(k);
    for i in 1..=k as i64 {
        let mut row = Vec::with_capacity(m);
        for j in i..i + m as i64 {
            let num = p.plucker(&basic_subset(n, m, i, j));
            let den = p.plucker(&basic_subset(n, m, i + 1, j));
            row.push(num.div(&den)?);
        }
        x.push(row);
    }
    RationalRect::new(n, k, x, p.t.clone())
}

type Vertex = (i64, i64);

/// Directed acyclic planar network with weighted edges, numbered sources and sinks.
#[derive(Clone, Debug)]
pub struct PlanarNetwork<F> {
    pub sources: Vec<Vertex>,
    pub sinks: Vec<Vertex>,
    out_edges: HashMap<Vertex, Vec<(Vertex, F)>>,
}

impl<F: Field> PlanarNetwork<F> {
    pub fn new(sources: Vec<Vertex>, sinks: Vec<Vertex>, edges: Vec<(Vertex, Vertex, F)>) -> Self {
        let mut out_edges: HashMap<Vertex, Vec<(Vertex, F)>> = HashMap::new();
        for (a, b, w) in edges {
            out_edges.entry(a).or_default().push((b, w));
        }
        PlanarNetwork { sources, sinks, out_edges }
    }

    /// The network `Γ_{k,n}` of a `k`-row rectangle; its path matrix is `Φ_k`.
    pub fn gamma(rect: &RationalRect<F>) -> Self {
        let (n, k) = (rect.n as i64, rect.k as i64);
        let sinks = (1..=n).map(|j| (0, j)).collect();
        let sources = (1..=n).map(|j| (k, j - k)).collect();
        let mut edges = Vec::new();
        for i in 1..=k {
            for j in 1..=n - k {
                edges.push(((i, j), (i - 1, j), F::one()));
            }
            for j in 1..=n {
                let w = if (0..=n - k).contains(&(j - i)) { rect.small_x(i as usize, j as usize) } else { F::one() };
                edges.push(((i, j - i), (i - 1, j - i + 1), w));
            }
        }
        PlanarNetwork::new(sources, sinks, edges)
    }

    /// Weighted path count from source `i` to sink `j` (one-based).
    pub fn path_matrix(&self) -> Mat<F> {
        Mat::from_fn(self.sources.len(), self.sinks.len(), |i, j| {
            self.lindstrom_minor(&[i as i64 + 1], &[j as i64 + 1]).expect("valid indices")
        })
    }

    /// Signed weighted count of vertex-disjoint path families from sources `I`
    /// to sinks `J` (one-based index lists of equal length).
    pub fn lindstrom_minor(&self, sources: &[i64], sinks: &[i64]) -> Result<F> {
        if sources.len() != sinks.len() {
            return Err(GeomError::invalid("need equally many sources and sinks"));
        }
        let pick = |list: &[Vertex], idx: &[i64]| -> Result<Vec<Vertex>> {
            idx.iter()
                .map(|&i| list.get((i - 1) as usize).copied().ok_or_else(|| GeomError::invalid(format!("no terminal {i}"))))
                .collect()
        };
        let src = pick(&self.sources, sources)?;
        let snk = pick(&self.sinks, sinks)?;
        let mut used = std::collections::HashSet::new();
        let mut assigned = vec![usize::MAX; src.len()];
        let mut total = F::zero();
        self.families(0, &src, &snk, &mut used, &mut assigned, F::one(), &mut total);
        Ok(total)
    }

    #[allow(clippy::too_many_arguments)]
    fn families(
        &self,
        s: usize,
        src: &[Vertex],
        snk: &[Vertex],
        used: &mut std::collections::HashSet<Vertex>,
        assigned: &mut Vec<usize>,
        weight: F,
        total: &mut F,
    ) {
        if s == src.len() {
            let sign = permutation_sign(assigned);
            *total = if sign > 0 { total.add(&weight) } else { total.sub(&weight) };
            return;
        }
        if used.contains(&src[s]) {
            return;
        }
        used.insert(src[s]);
        let mut path = vec![src[s]];
        self.walk(s, src, snk, used, assigned, &mut path, weight, total);
        used.remove(&src[s]);
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        s: usize,
        src: &[Vertex],
        snk: &[Vertex],
        used: &mut std::collections::HashSet<Vertex>,
        assigned: &mut Vec<usize>,
        path: &mut Vec<Vertex>,
        weight: F,
        total: &mut F,
    ) {
        let here = *path.last().unwrap();
        if let Some(t) = snk.iter().position(|&v| v == here) {
            if !assigned.contains(&t) {
                assigned[s] = t;
                self.families(s + 1, src, snk, used, assigned, weight.clone(), total);
                assigned[s] = usize::MAX;
            }
        }
        for (next, w) in self.out_edges.get(&here).into_iter().flatten() {
            if used.contains(next) || w.is_zero() {
                continue;
            }
            used.insert(*next);
            path.push(*next);
            self.walk(s, src, snk, used, assigned, path, weight.mul(w), total);
            path.pop();
            used.remove(next);
        }
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn subset_utilities() {
        assert_eq!(w0(5, &[1, 2]), vec![4, 5]);
        assert_eq!(complement(5, &[1, 3]), vec![2, 4, 5]);
        assert_eq!(star(5, &[1, 3]), vec![1, 2, 4]);
        assert_eq!(shift_by(5, &[1, 3], 1), vec![2, 5]);
        assert_eq!(cyclic_interval_count(5, &[1, 5]), 1);
        assert_eq!(cyclic_interval_count(5, &[1, 3]), 2);
        assert_eq!(cyclic_interval_count(5, &[2, 3, 4]), 1);
        assert_eq!(k_subsets(4, 2).len(), 6);
    }

    #[test]
    fn plucker_conventions() {
        let m = Mat::from_rows(vec![vec![q(1), q(0)], vec![q(2), q(1)], vec![q(0), q(3)], vec![q(1), q(1)]]).unwrap();
        let g = GrassmannPoint::new(m).unwrap();
        assert_eq!(g.plucker(&[1, 2]), q(1));
        assert_eq!(g.plucker(&[2, 1]), q(1));
        assert_eq!(g.plucker(&[5, 6]), q(1));
        assert_eq!(g.plucker(&[1, 5]), q(0));
        assert_eq!(g.plucker(&[2, 3]), q(6));
        assert_eq!(g.plucker(&[1, 2, 3]), q(0));
    }

    #[test]
    fn rank_deficient_is_degenerate() {
        let m = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(3), q(6)]]).unwrap();
        assert!(matches!(GrassmannPoint::new(m), Err(GeomError::DegenerateInput(_))));
    }
}
