//! Weight-graded pieces of the unnormalized chain complex of a presentation.

use crate::snf::SparseMatrix;
use crate::DoldKanError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use simpforge_core::check::Certificate;
use simpforge_core::salg::{Bottom, ChainKey, Presentation};
use simpforge_core::{Counterexample, Monomial, Polynomial, VarId};
use std::collections::BTreeMap;

/// Weight of each non-π generator; `π` always weighs 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weights {
    /// Every generator has the same weight.
    Uniform(u32),
    /// A chain whose bottom alias is `π^m` weighs `m`; free-bottomed chains weigh 1.
    PerChain,
}

impl Weights {
    pub fn of(&self, p: &Presentation, v: &VarId) -> u32 {
        match self {
            Weights::Uniform(t) => *t,
            Weights::PerChain => match p.bottom(ChainKey::of(v)) {
                Some(Bottom::Power(m)) if m > 0 => m,
                _ => 1,
            },
        }
    }
}

/// One weight-`w` piece `C_0 ← C_1 ← … ← C_{p_max}` with `∂_p = Σ (−1)^i d_i`.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub name: String,
    pub w: u32,
    /// Ordered monomial basis of each level.
    pub bases: Vec<Vec<Monomial>>,
    /// `boundaries[p]: C_p → C_{p−1}`; `boundaries[0]` is the zero map to the zero module.
    pub boundaries: Vec<SparseMatrix>,
}

impl GradedComplex {
    pub fn p_max(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dim(&self, p: usize) -> usize {
        self.bases[p].len()
    }

    /// `∂_{p} ∘ ∂_{p+1} = 0` for every level.
    pub fn check_d_squared(&self) -> Certificate {
        for p in 1..self.p_max() {
            let dd = self.boundaries[p].mul(&self.boundaries[p + 1]);
            if let Some(c) = (0..dd.cols()).find(|&c| !dd.column(c).is_empty()) {
                let (r, v) = &dd.column(c)[0];
                return Err(Counterexample::new(
                    p + 1,
                    format!("w={} d∘d", self.w),
                    self.bases[p + 1][c].to_string(),
                    format!("{v}·{}", self.bases[p - 1][*r]),
                    "0",
                ));
            }
        }
        Ok(())
    }

    /// Coordinates of a level-`p` polynomial in the basis.
    pub fn coordinates(&self, p: usize, x: &Polynomial) -> Result<BTreeMap<usize, BigInt>, DoldKanError> {
        let mut out = BTreeMap::new();
        for (m, c) in x.terms() {
            let i = self.bases[p].binary_search(m).map_err(|_| DoldKanError::NotInBasis {
                level: p,
                w: self.w,
                monomial: m.to_string(),
            })?;
            out.insert(i, c.clone());
        }
        Ok(out)
    }
}

/// All monomials of total weight exactly `w` in the given weighted generators (and `π` unless `no_pi`).
pub fn weighted_monomials(gens: &[(VarId, u32)], w: u32, no_pi: bool) -> Vec<Monomial> {
    fn rec(gens: &[(VarId, u32)], left: u32, acc: &mut Vec<(VarId, u32)>, no_pi: bool, out: &mut Vec<Monomial>) {
        match gens.split_first() {
            None => {
                if !no_pi || left == 0 {
                    out.push(Monomial::from_parts(left, acc.iter().cloned()));
                }
            }
            Some(((v, wt), rest)) => {
                let mut e = 0;
                loop {
                    if e > 0 {
                        acc.push((v.clone(), e));
                    }
                    rec(rest, left - e * wt, acc, no_pi, out);
                    if e > 0 {
                        acc.pop();
                    }
                    if (e + 1) * wt > left || *wt == 0 {
                        break;
                    }
                    e += 1;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(gens, w, &mut Vec::new(), no_pi, &mut out);
    out.sort();
    out
}

/// Assemble the weight-`w` piece through level `p_max`.
pub fn assemble(p: &Presentation, weights: &Weights, w: u32, p_max: usize) -> Result<GradedComplex, DoldKanError> {
    let mut bases = Vec::with_capacity(p_max + 1);
    for level in 0..=p_max {
        let gens: Vec<(VarId, u32)> = p
            .free_generators(level)
            .into_iter()
            .map(|v| {
                let wt = weights.of(p, &v);
                (v, wt)
            })
            .collect();
        bases.push(weighted_monomials(&gens, w, p.is_pi_zero()));
    }
    let mut cx = GradedComplex { name: p.name().to_string(), w, bases, boundaries: Vec::new() };
    cx.boundaries.push(SparseMatrix::zero(0, cx.dim(0)));
    for level in 1..=p_max {
        let mut columns = Vec::with_capacity(cx.dim(level));
        for m in &cx.bases[level] {
            let x = Polynomial::from_term(m.clone(), BigInt::one());
            let mut col: BTreeMap<usize, BigInt> = BTreeMap::new();
            for i in 0..=level {
                let y = p.face(level, i, &x)?;
                if y.is_zero() {
                    continue;
                }
                if y.terms().any(|(n, _)| monomial_weight(p, weights, n) != w) {
                    return Err(DoldKanError::Inhomogeneous { level, face: i, generator: m.to_string(), image: y.to_string() });
                }
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                for (r, c) in cx.coordinates(level - 1, &y)? {
                    *col.entry(r).or_default() += &sign * c;
                }
            }
            col.retain(|_, v| !v.is_zero());
            columns.push(col);
        }
        cx.boundaries.push(SparseMatrix::from_columns(cx.dim(level - 1), columns));
    }
    cx.check_d_squared().map_err(DoldKanError::DSquared)?;
    Ok(cx)
}

pub fn monomial_weight(p: &Presentation, weights: &Weights, m: &Monomial) -> u32 {
    m.pi_exponent() + m.var_exponents().iter().map(|(v, e)| e * weights.of(p, v)).sum::<u32>()
}
