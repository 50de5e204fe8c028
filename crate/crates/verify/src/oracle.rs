//! Koszul complexes over `ℤ[π]` with their own small integer diagonalization, used as homology oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use simpforge_doldkan::AbelianGroup;

/// `K(π^{e_1}, …, π^{e_r})` over `ℤ[π]`, optionally tensored with `ℤ[π]/(π^c)`.
///
/// The exterior generator `e_i` has weight `e_i`, so every weight piece is a finite free complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Koszul {
    pub exponents: Vec<u32>,
    pub modulus: Option<u32>,
}

impl Koszul {
    pub fn new(exponents: Vec<u32>, modulus: Option<u32>) -> Self {
        Koszul { exponents, modulus }
    }

    fn subset_weight(&self, s: u32) -> u32 {
        (0..self.exponents.len()).filter(|i| s >> i & 1 == 1).map(|i| self.exponents[i]).sum()
    }

    /// Basis `(π-exponent, subset)` of degree `q`, weight `w`.
    fn basis(&self, w: u32, q: usize) -> Vec<(u32, u32)> {
        let r = self.exponents.len();
        (0..1u32 << r)
            .filter(|s| s.count_ones() as usize == q)
            .filter_map(|s| {
                let a = w.checked_sub(self.subset_weight(s))?;
                self.modulus.map_or(true, |c| a < c).then_some((a, s))
            })
            .collect()
    }

    /// `∂: degree q → degree q-1` as rows × columns.
    fn boundary(&self, w: u32, q: usize) -> Vec<Vec<BigInt>> {
        let src = self.basis(w, q);
        let dst = if q == 0 { Vec::new() } else { self.basis(w, q - 1) };
        let mut m = vec![vec![BigInt::zero(); src.len()]; dst.len()];
        for (col, &(a, s)) in src.iter().enumerate() {
            let mut sign = BigInt::one();
            for i in 0..self.exponents.len() {
                if s >> i & 1 == 0 {
                    continue;
                }
                let target = (a + self.exponents[i], s & !(1 << i));
                if let Some(row) = dst.iter().position(|b| *b == target) {
                    m[row][col] += &sign;
                }
                sign = -sign;
            }
        }
        m
    }

    pub fn dim(&self, w: u32, q: usize) -> usize {
        self.basis(w, q).len()
    }

    /// `H_q` of the weight-`w` piece.
    pub fn homology(&self, w: u32, q: usize) -> AbelianGroup {
        let out = diagonal(self.boundary(w, q));
        let inc = diagonal(self.boundary(w, q + 1));
        let rank = self.dim(w, q) - out.len() - inc.len();
        let torsion = inc.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup { rank, torsion }
    }
}

/// Nonzero invariant factors of an integer matrix, by gcd row and column elimination.
pub fn diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let mut out = Vec::new();
    loop {
        let pivot = m
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v)))
            .filter(|(_, _, v)| !v.is_zero())
            .min_by(|a, b| a.2.abs().cmp(&b.2.abs()))
            .map(|(r, c, _)| (r, c));
        let Some((r, c)) = pivot else { break };
        let p = m[r][c].clone();
        let mut clean = true;
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let q = m[i][c].div_floor(&p);
                for j in 0..m[i].len() {
                    let t = &q * &m[r][j];
                    m[i][j] -= t;
                }
                clean &= m[i][c].is_zero();
            }
        }
        for j in 0..m[r].len() {
            if j != c && !m[r][j].is_zero() {
                let q = m[r][j].div_floor(&p);
                for row in m.iter_mut() {
                    let t = &q * &row[c];
                    row[j] -= t;
                }
                clean &= m[r][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        if let Some(i) = (0..m.len()).find(|&i| i != r && m[i].iter().any(|v| !(v % &p).is_zero())) {
            for k in 0..m[r].len() {
                let t = m[i][k].clone();
                m[r][k] += t;
            }
            continue;
        }
        out.push(p.abs());
        m.remove(r);
        for row in m.iter_mut() {
            row.remove(c);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn diagonal_forms() {
        assert_eq!(diagonal(ints(&[&[2, 4], &[6, 8]])), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(diagonal(ints(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
        assert!(diagonal(ints(&[&[0, 0]])).is_empty());
    }

    #[test]
    fn one_variable() {
        let k = Koszul::new(vec![2], None);
        assert_eq!(k.homology(0, 0), AbelianGroup::free(1));
        assert_eq!(k.homology(1, 0), AbelianGroup::free(1));
        assert_eq!(k.homology(2, 0), AbelianGroup::zero());
        assert_eq!(k.homology(2, 1), AbelianGroup::zero());
    }

    #[test]
    fn reduced_mod_pi() {
        let k = Koszul::new(vec![1], Some(1));
        assert_eq!(k.homology(0, 0), AbelianGroup::free(1));
        assert_eq!(k.homology(1, 1), AbelianGroup::free(1));
        assert_eq!(k.homology(1, 0), AbelianGroup::zero());
        assert_eq!(k.homology(2, 1), AbelianGroup::zero());
    }

    #[test]
    fn two_variables() {
        let k = Koszul::new(vec![1, 1], None);
        assert_eq!(k.homology(0, 0), AbelianGroup::free(1));
        assert_eq!(k.homology(1, 1), AbelianGroup::free(1));
        for w in 0..6 {
            assert_eq!(k.homology(w, 2), AbelianGroup::zero());
        }
    }
}
