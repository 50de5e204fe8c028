//! Exact integer homology, induced maps on homology, and `π₀`.

use crate::complex::{assemble, GradedComplex, Weights};
use crate::snf::{elementary_divisors, smith, DenseMatrix, Smith};
use crate::DoldKanError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use simpforge_core::salg::{Morphism, Presentation};
use simpforge_core::{Monomial, Polynomial};
use std::fmt;

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i`, each `d_i > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: BigInt) -> Self {
        AbelianGroup { rank: 0, torsion: vec![order] }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn certified(c: &GradedComplex, degree: usize) -> Result<(), DoldKanError> {
    if degree + 1 > c.p_max() {
        return Err(DoldKanError::Range { degree, p_max: c.p_max() });
    }
    Ok(())
}

fn group_from(dim: usize, rank_out: usize, incoming: &[BigInt]) -> AbelianGroup {
    AbelianGroup {
        rank: dim - rank_out - incoming.len(),
        torsion: incoming.iter().filter(|d| !d.is_one()).cloned().collect(),
    }
}

/// `H_degree`; requires level `degree + 1` to be present.
pub fn homology(c: &GradedComplex, degree: usize) -> Result<AbelianGroup, DoldKanError> {
    certified(c, degree)?;
    let out = elementary_divisors(&c.boundaries[degree]).len();
    let incoming = elementary_divisors(&c.boundaries[degree + 1]);
    Ok(group_from(c.dim(degree), out, &incoming))
}

/// `H_0, …, H_{p_max − 1}`, reusing each boundary's divisors once.
pub fn homology_all(c: &GradedComplex) -> Vec<AbelianGroup> {
    let divisors: Vec<Vec<BigInt>> = c.boundaries.iter().map(elementary_divisors).collect();
    (0..c.p_max()).map(|d| group_from(c.dim(d), divisors[d].len(), &divisors[d + 1])).collect()
}

/// A basis of `H_degree` computed with explicit transforms.
struct HomologyBasis {
    /// Smith form of the outgoing boundary; its `q` columns past the rank span the cycles.
    out: Smith,
    /// Smith form of the incoming boundary written in cycle coordinates.
    rel: Smith,
    group: AbelianGroup,
}

impl HomologyBasis {
    fn new(c: &GradedComplex, degree: usize) -> Result<Self, DoldKanError> {
        certified(c, degree)?;
        let out = smith(&c.boundaries[degree].to_dense());
        let incoming = c.boundaries[degree + 1].to_dense();
        let coords = out.q_inv.rows_from(out.rank()).mul(&incoming);
        let rel = smith(&coords);
        let cycles = c.dim(degree) - out.rank();
        let group = AbelianGroup {
            rank: cycles - rel.rank(),
            torsion: rel.divisors.iter().filter(|d| !d.is_one()).cloned().collect(),
        };
        Ok(HomologyBasis { out, rel, group })
    }

    /// Chain-level representatives of the free generators.
    fn free_representatives(&self) -> Vec<Vec<BigInt>> {
        let kernel = self.out.q.cols_from(self.out.rank());
        let gens = kernel.mul(&self.rel.p_inv);
        (self.rel.rank()..gens.cols()).map(|j| gens.column(j)).collect()
    }

    /// Free coordinates of the class of a cycle.
    fn free_coordinates(&self, z: &[BigInt]) -> Result<Vec<BigInt>, DoldKanError> {
        let y = self.out.q_inv.mul_vec(z);
        if y[..self.out.rank()].iter().any(|v| !v.is_zero()) {
            return Err(DoldKanError::NotACycle);
        }
        let coords = self.rel.p.mul_vec(&y[self.out.rank()..]);
        Ok(coords[self.rel.rank()..].to_vec())
    }
}

/// Matrix of a morphism on the free parts of `H_degree` in weight `w`.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    /// `target.rank × source.rank`.
    pub matrix: DenseMatrix,
}

impl InducedMap {
    /// Both groups free of equal rank and the matrix unimodular.
    pub fn is_iso(&self) -> bool {
        self.source.torsion.is_empty()
            && self.target.torsion.is_empty()
            && self.source.rank == self.target.rank
            && {
                let s = smith(&self.matrix);
                s.rank() == self.source.rank && s.divisors.iter().all(One::is_one)
            }
    }
}

/// The map `H_degree(f)` on weight-`w` pieces; both sides use the same weight scheme.
pub fn induced_map_on_homology(
    f: &Morphism,
    weights: &Weights,
    w: u32,
    degree: usize,
) -> Result<InducedMap, DoldKanError> {
    let levels = degree + 1;
    let src = assemble(f.domain(), weights, w, levels)?;
    let tgt = assemble(f.codomain(), weights, w, levels)?;
    let hs = HomologyBasis::new(&src, degree)?;
    let ht = HomologyBasis::new(&tgt, degree)?;
    let reps = hs.free_representatives();
    let mut matrix = DenseMatrix::zero(ht.group.rank, hs.group.rank);
    for (j, z) in reps.iter().enumerate() {
        let chain = chain_from_coordinates(&src, degree, z);
        let image = f.eval(degree, &chain)?;
        let coords = tgt.coordinates(degree, &image)?;
        let mut v = vec![BigInt::zero(); tgt.dim(degree)];
        for (i, c) in coords {
            v[i] = c;
        }
        for (i, c) in ht.free_coordinates(&v)?.into_iter().enumerate() {
            matrix.set(i, j, c);
        }
    }
    Ok(InducedMap { source: hs.group, target: ht.group, matrix })
}

fn chain_from_coordinates(c: &GradedComplex, p: usize, z: &[BigInt]) -> Polynomial {
    Polynomial::from_terms(
        c.bases[p].iter().zip(z).filter(|(_, v)| !v.is_zero()).map(|(m, v)| (m.clone(), v.clone())),
    )
}

/// The ideal of `ℤ[π]` presenting `π₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi0 {
    /// `d_0(g) − d_1(g)` for each free level-1 generator `g`.
    pub generators: Vec<Polynomial>,
    /// A single generator when the gcd lies in the ideal.
    pub principal: Option<Polynomial>,
}

impl Pi0 {
    /// Weight-`w` piece of `ℤ[π]/(g)` when the generator is `c·π^e` or zero.
    pub fn graded_piece(&self, w: u32) -> Option<AbelianGroup> {
        let g = self.principal.as_ref()?;
        if g.is_zero() {
            return Some(AbelianGroup::free(1));
        }
        let (m, c) = match g.terms().collect::<Vec<_>>().as_slice() {
            [(m, c)] if m.var_exponents().is_empty() => ((*m).clone(), (*c).abs()),
            _ => return None,
        };
        Some(if w < m.pi_exponent() {
            AbelianGroup::free(1)
        } else if c.is_one() {
            AbelianGroup::zero()
        } else {
            AbelianGroup::cyclic(c)
        })
    }
}

/// `π₀` as the coequalizer of `d_0, d_1`; level 0 must be `ℤ[π]`.
pub fn pi0(p: &Presentation) -> Result<Pi0, DoldKanError> {
    if let Some(g) = p.free_generators(0).first() {
        return Err(DoldKanError::NotPiOnly(format!("level 0 has the free generator {g}")));
    }
    let mut generators = Vec::new();
    for g in p.free_generators(1) {
        let x = Polynomial::var(g.clone());
        let diff = p.face(1, 0, &x)? - p.face(1, 1, &x)?;
        if diff.pi_coefficients().is_none() {
            return Err(DoldKanError::NotPiOnly(format!("d0({g}) - d1({g}) = {diff}")));
        }
        generators.push(diff);
    }
    let mut g = Vec::new();
    for x in &generators {
        g = gcd_coefficients(&g, &x.pi_coefficients().expect("checked above"));
    }
    let g = Polynomial::from_pi_coefficients(&g);
    let principal = (generators.is_empty() || generators.iter().any(|x| x == &g || x == &-g.clone())).then_some(g);
    Ok(Pi0 { generators, principal })
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |a, b| a.gcd(b))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        r.iter_mut().for_each(|x| *x *= &lb);
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] -= &lr * bi;
        }
        trim(&mut r);
    }
    r
}

/// Gcd in `ℤ[π]` of two coefficient vectors, with positive leading coefficient.
pub fn gcd_coefficients(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return if b.is_empty() { b } else { scale_positive(b) };
    }
    if b.is_empty() {
        return scale_positive(a);
    }
    let c = content(&a).gcd(&content(&b));
    let (mut x, mut y) = (primitive(&a), primitive(&b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r) };
    }
    x.iter().map(|v| v * &c).collect()
}

fn scale_positive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(Signed::is_negative) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
    v
}

/// The basis monomials of a complex at a level, for reporting.
pub fn basis_text(c: &GradedComplex, p: usize) -> Vec<String> {
    c.bases[p].iter().map(Monomial::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use simpforge_models::ModelId;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_in_z_pi() {
        assert_eq!(gcd_coefficients(&ints(&[0, 0, 2]), &ints(&[0, 4])), ints(&[0, 2]));
        assert_eq!(gcd_coefficients(&ints(&[-1, 0, 1]), &ints(&[1, 1])), ints(&[1, 1]));
        assert_eq!(gcd_coefficients(&ints(&[2]), &ints(&[0, 1])), ints(&[1]));
    }

    #[test]
    fn pi0_of_models() {
        for m in 1..=3 {
            let q = pi0(&ModelId::KaM(m).build().unwrap()).unwrap();
            assert_eq!(q.principal, Some(Polynomial::pi_pow(m)));
        }
        let q = pi0(&ModelId::KA.build().unwrap()).unwrap();
        assert_eq!(q.principal, Some(Polynomial::pi()));
        let c = pi0(&Presentation::constant("A")).unwrap();
        assert_eq!(c.principal, Some(Polynomial::zero()));
        assert!(pi0(&ModelId::BarAtA.build().unwrap()).is_err());
    }

    #[test]
    fn identity_induces_identity() {
        let p = std::sync::Arc::new(ModelId::KaM(1).build().unwrap().specialize_pi_zero("k(1)|0"));
        let id = Morphism::identity(p);
        for w in 0..=2 {
            for degree in 0..=1 {
                let f = induced_map_on_homology(&id, &Weights::PerChain, w, degree).unwrap();
                assert_eq!(f.matrix, DenseMatrix::identity(f.source.rank));
                assert!(f.is_iso());
            }
        }
    }
}
