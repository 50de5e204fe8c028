//! Integer matrices and Smith normal form.
//!
//! [`elementary_divisors`] works on sparse input: it first clears every unit pivot by row
//! elimination and only densifies the remainder. [`smith`] is the dense algorithm with
//! unimodular transforms, used where explicit homology bases are required.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Column-major sparse integer matrix; each column is sorted by row and holds no zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn from_columns(rows: usize, columns: Vec<BTreeMap<usize, BigInt>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                assert!(c.keys().all(|&r| r < rows), "row index out of range");
                c.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        match self.columns[c].binary_search_by_key(&r, |e| e.0) {
            Ok(i) => self.columns[c][i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (k, v) in col {
                    for (r, a) in &self.columns[*k] {
                        *acc.entry(*r).or_default() += a * v;
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    /// The matrix with rows and columns renumbered: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut columns = vec![BTreeMap::new(); self.cols];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[col_perm[c]].insert(row_perm[*r], v.clone());
            }
        }
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zero(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                d.set(*r, c, v.clone());
            }
        }
        d
    }
}

/// Row-major dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl DenseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = DenseMatrix::zero(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, v) in r.into_iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = DenseMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|k| self.get(i, k) * &v[k]).sum())
            .collect()
    }

    /// Rows `lo..` of the matrix.
    pub fn rows_from(&self, lo: usize) -> DenseMatrix {
        let lo = lo.min(self.rows);
        DenseMatrix { rows: self.rows - lo, cols: self.cols, data: self.data[lo * self.cols..].to_vec() }
    }

    /// Columns `lo..` of the matrix.
    pub fn cols_from(&self, lo: usize) -> DenseMatrix {
        let lo = lo.min(self.cols);
        let mut out = DenseMatrix::zero(self.rows, self.cols - lo);
        for r in 0..self.rows {
            for c in lo..self.cols {
                out.set(r, c - lo, self.get(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[dst] += q · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * q;
            if !v.is_zero() {
                self.data[dst * self.cols + c] += v;
            }
        }
    }

    /// `col[dst] += q · col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * q;
            if !v.is_zero() {
                self.data[r * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self.data[r * self.cols + c];
            self.data[r * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + c];
            self.data[r * self.cols + c] = v;
        }
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `p · a · q = diag(divisors, 0, …)` with `p`, `q` unimodular; inverses are kept alongside.
#[derive(Clone, Debug)]
pub struct Smith {
    pub p: DenseMatrix,
    pub p_inv: DenseMatrix,
    pub q: DenseMatrix,
    pub q_inv: DenseMatrix,
    /// Positive diagonal entries, each dividing the next.
    pub divisors: Vec<BigInt>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

/// Smith normal form with transforms.
pub fn smith(a: &DenseMatrix) -> Smith {
    let (rows, cols) = (a.rows, a.cols);
    let mut m = a.clone();
    let mut p = DenseMatrix::identity(rows);
    let mut p_inv = DenseMatrix::identity(rows);
    let mut q = DenseMatrix::identity(cols);
    let mut q_inv = DenseMatrix::identity(cols);
    let mut divisors = Vec::new();

    let swap_r = |m: &mut DenseMatrix, p: &mut DenseMatrix, p_inv: &mut DenseMatrix, x: usize, y: usize| {
        m.swap_rows(x, y);
        p.swap_rows(x, y);
        p_inv.swap_cols(x, y);
    };
    let swap_c = |m: &mut DenseMatrix, q: &mut DenseMatrix, q_inv: &mut DenseMatrix, x: usize, y: usize| {
        m.swap_cols(x, y);
        q.swap_cols(x, y);
        q_inv.swap_rows(x, y);
    };
    // row[dst] += k · row[src]
    let add_r = |m: &mut DenseMatrix, p: &mut DenseMatrix, p_inv: &mut DenseMatrix, dst: usize, src: usize, k: &BigInt| {
        m.add_row(dst, src, k);
        p.add_row(dst, src, k);
        p_inv.add_col(src, dst, &-k);
    };
    // col[dst] += k · col[src]
    let add_c = |m: &mut DenseMatrix, q: &mut DenseMatrix, q_inv: &mut DenseMatrix, dst: usize, src: usize, k: &BigInt| {
        m.add_col(dst, src, k);
        q.add_col(dst, src, k);
        q_inv.add_row(src, dst, &-k);
    };

    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = m.get(r, c);
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < m.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        swap_r(&mut m, &mut p, &mut p_inv, t, br);
        swap_c(&mut m, &mut q, &mut q_inv, t, bc);
        loop {
            let mut changed = false;
            for r in t + 1..rows {
                if m.get(r, t).is_zero() {
                    continue;
                }
                let k = -(m.get(r, t).div_floor(m.get(t, t)));
                add_r(&mut m, &mut p, &mut p_inv, r, t, &k);
                if !m.get(r, t).is_zero() {
                    swap_r(&mut m, &mut p, &mut p_inv, t, r);
                    changed = true;
                }
            }
            for c in t + 1..cols {
                if m.get(t, c).is_zero() {
                    continue;
                }
                let k = -(m.get(t, c).div_floor(m.get(t, t)));
                add_c(&mut m, &mut q, &mut q_inv, c, t, &k);
                if !m.get(t, c).is_zero() {
                    swap_c(&mut m, &mut q, &mut q_inv, t, c);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            let pivot = m.get(t, t).clone();
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !m.get(r, c).is_multiple_of(&pivot)));
            match offender {
                Some(r) => add_r(&mut m, &mut p, &mut p_inv, t, r, &BigInt::one()),
                None => break,
            }
        }
        if m.get(t, t).is_negative() {
            m.negate_row(t);
            p.negate_row(t);
            p_inv.negate_col(t);
        }
        divisors.push(m.get(t, t).clone());
    }
    Smith { p, p_inv, q, q_inv, divisors }
}

/// Nonzero elementary divisors, positive and in divisibility order.
pub fn elementary_divisors(a: &SparseMatrix) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); a.rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); a.cols];
    for (c, col) in a.columns.iter().enumerate() {
        for (r, v) in col {
            rows[*r].insert(c, v.clone());
            col_rows[c].insert(*r);
        }
    }
    let mut active: BTreeSet<(usize, usize)> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_empty())
        .map(|(i, r)| (r.len(), i))
        .collect();
    let mut units = 0usize;

    while let Some(&(len, r)) = active.iter().next() {
        active.remove(&(len, r));
        let pivot = rows[r]
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(c, _)| (col_rows[**c].len(), **c))
            .map(|(c, v)| (*c, v.clone()));
        let Some((pc, pv)) = pivot else { continue };
        units += 1;
        let pivot_row = std::mem::take(&mut rows[r]);
        for c in pivot_row.keys() {
            col_rows[*c].remove(&r);
        }
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for o in others {
            let factor = &rows[o][&pc] * &pv;
            active.remove(&(rows[o].len(), o));
            for (c, v) in &pivot_row {
                let entry = rows[o].entry(*c).or_default();
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[o].remove(c);
                    col_rows[*c].remove(&o);
                } else {
                    col_rows[*c].insert(o);
                }
            }
            if !rows[o].is_empty() {
                active.insert((rows[o].len(), o));
            }
        }
    }

    let rest: Vec<&BTreeMap<usize, BigInt>> = rows.iter().filter(|r| !r.is_empty()).collect();
    let mut out = vec![BigInt::one(); units];
    if !rest.is_empty() {
        let cols: BTreeSet<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
        let index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut d = DenseMatrix::zero(rest.len(), cols.len());
        for (i, r) in rest.iter().enumerate() {
            for (c, v) in r.iter() {
                d.set(i, index[c], v.clone());
            }
        }
        out.extend(smith(&d).divisors);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn textbook_example() {
        let a = DenseMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith(&a);
        assert_eq!(s.divisors, ints(&[2, 6, 12]));
        let d = s.p.mul(&a).mul(&s.q);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.divisors[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &want);
            }
        }
        assert_eq!(s.p.mul(&s.p_inv), DenseMatrix::identity(3));
        assert_eq!(s.q.mul(&s.q_inv), DenseMatrix::identity(3));
    }

    #[test]
    fn sparse_route_matches_dense() {
        let a = DenseMatrix::from_rows(vec![vec![1, 2, 0, 3], vec![0, 2, 4, 0], vec![1, 0, -4, 3]]);
        let mut cols = vec![BTreeMap::new(); 4];
        for r in 0..3 {
            for (c, col) in cols.iter_mut().enumerate() {
                col.insert(r, a.get(r, c).clone());
            }
        }
        let sp = SparseMatrix::from_columns(3, cols);
        assert_eq!(elementary_divisors(&sp), smith(&a).divisors);
        assert_eq!(elementary_divisors(&sp), ints(&[1, 2]));
    }

    #[test]
    fn zero_and_empty() {
        assert!(smith(&DenseMatrix::zero(2, 3)).divisors.is_empty());
        assert!(elementary_divisors(&SparseMatrix::zero(0, 4)).is_empty());
    }
}
