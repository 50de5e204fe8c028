//! Structural morphisms between the built-in models.

use crate::formulas::{Formulas, Mutation, ZetaConvention};
use crate::id::ModelId;
use crate::perm::{Perm, VarRho};
use num_bigint::BigInt;
use num_traits::One;
use simpforge_core::salg::{
    compose, compose_all, induced_on_quotients, morphisms_equal, ChainKey, ChainTable, Morphism, Presentation,
};
use simpforge_core::{Certificate, Error, Family, Result};
use std::sync::Arc;

pub fn model(id: ModelId) -> Result<Arc<Presentation>> {
    id.build().map(Arc::new)
}

/// Rename chains by a function of `(family, factor)`.
pub fn relabel(name: impl Into<String>, dom: ModelId, cod: ModelId, f: impl Fn(ChainKey) -> ChainKey) -> Result<Morphism> {
    Ok(Morphism::relabeling(name, model(dom)?, model(cod)?, f))
}

/// The map that keeps every chain name; between a presentation and a quotient of it.
pub fn quotient_map(from: ModelId, to: ModelId) -> Result<Morphism> {
    relabel(format!("quot[{from}->{to}]"), from, to, |k| k)
}

/// `t_a ↦ π^e t_a` on every chain, between presentations with the same chain names.
pub fn scale_chains(name: impl Into<String>, dom: Arc<Presentation>, cod: Arc<Presentation>, e: u32) -> Morphism {
    let table = dom.chain_keys().map(|k| (k, vec![(BigInt::one(), e, k)])).collect();
    Morphism::chain_linear(name, dom, cod, table)
}

/// `can(m_hi, m_lo)^{⊗n}: k_A^{⊗n}(m_hi) → k_A^{⊗n}(m_lo)`.
pub fn can_map(m_hi: u32, m_lo: u32, n: u32, fm: &Formulas) -> Result<Morphism> {
    if m_hi < m_lo {
        return Err(Error::InvalidParameters(format!("can({m_hi},{m_lo}) needs m_hi ≥ m_lo")));
    }
    let dom = model(ModelId::KaTensor { n, m: m_hi })?;
    let cod = model(ModelId::KaTensor { n, m: m_lo })?;
    Ok(can_between(m_hi, m_lo, dom, cod, fm))
}

/// `can(m_hi, m_lo)` on presentations carrying the same chains (possibly simplex-tensored).
pub fn can_between(m_hi: u32, m_lo: u32, dom: Arc<Presentation>, cod: Arc<Presentation>, fm: &Formulas) -> Morphism {
    let e = m_hi - m_lo + u32::from(fm.has(Mutation::CanExponent));
    scale_chains(format!("can({m_hi},{m_lo})"), dom, cod, e)
}

/// `k_A(m) → k_A^{⊗n}(m)`, `t ↦ t_b`.
pub fn factor_inclusion(n: u32, b: u32, m: u32) -> Result<Morphism> {
    if b == 0 || b > n {
        return Err(Error::IndexOutOfRange(format!("factor {b} of {n}")));
    }
    relabel(format!("incl{b}"), ModelId::KaM(m), ModelId::KaTensor { n, m }, |_| ChainKey::t(b))
}

fn permute(perm: &Perm) -> impl Fn(ChainKey) -> ChainKey + '_ {
    move |k| ChainKey { family: k.family, factor: perm.apply(k.factor) }
}

/// The factor-permuting automorphism `ρ_n^b` of an `n`-factor tensor model.
pub fn rho_action(n: u32, b: u32, target: ModelId) -> Result<Morphism> {
    match target {
        ModelId::KaTensor { .. } | ModelId::KATensorA(_) => {}
        other => return Err(Error::InvalidParameters(format!("ρ acts on plain tensor models, not {other}"))),
    }
    if target.factors() != n {
        return Err(Error::InvalidParameters(format!("{target} has {} factors, not {n}", target.factors())));
    }
    if b >= n {
        return Err(Error::IndexOutOfRange(format!("b = {b} outside [{}]", n - 1)));
    }
    let perm = Perm::rho(n).pow(b as i64);
    relabel(format!("rho{n}^{b}"), target, target, permute(&perm))
}

/// Factor permutation between two models with the same number of factors.
pub fn permute_factors(name: impl Into<String>, dom: ModelId, cod: ModelId, perm: &Perm) -> Result<Morphism> {
    relabel(name, dom, cod, permute(perm))
}

fn zeta_rule(n: u32, fm: &Formulas) -> impl Fn(ChainKey) -> ChainKey {
    let perm = match fm.zeta {
        ZetaConvention::Forward => Perm::rho(n),
        ZetaConvention::Backward => Perm::rho(n).inverse(),
    };
    move |k| match k.family {
        Family::U => ChainKey::u(perm.apply(k.factor)),
        _ => k,
    }
}

/// `ζ_n` on `K_A^{⊗n}`: the `t` chains sit in the odd slots and stay; the `u` chains rotate.
pub fn zeta_automorphism(n: u32, fm: &Formulas) -> Result<Morphism> {
    let id = ModelId::KATensorA(n);
    relabel(format!("zeta{n}"), id, id, zeta_rule(n, fm))
}

/// `ζ_n: K_A^{⊗_{k_A} n} → K_A ⊗_A k_A^{⊗(n-1)}`.
pub fn zeta_lift(n: u32, fm: &Formulas) -> Result<Morphism> {
    relabel(format!("zeta{n}~"), ModelId::KATensorKa(n), ModelId::KATensorAKae(n - 1), zeta_rule(n, fm))
}

/// `ζ_n: K_A^{⊗_{k_A} n}/⟨t_1 - u_n⟩ → k_A^{⊗n}`, the map descended from [`zeta_lift`].
pub fn zeta_quotient(n: u32, fm: &Formulas) -> Result<Morphism> {
    induced_on_quotients(
        format!("zeta{n}"),
        &zeta_lift(n, fm)?,
        model(ModelId::KaQuotientOfK(n))?,
        model(ModelId::KaDiagOfK(n))?,
    )
}

/// The descent square: projecting after the lift equals the descended map after projecting.
pub fn zeta_descent_check(n: u32, p_max: usize, fm: &Formulas) -> Certificate {
    let run = || -> Result<(Morphism, Morphism)> {
        let lhs = compose(&quotient_map(ModelId::KATensorAKae(n - 1), ModelId::KaDiagOfK(n))?, &zeta_lift(n, fm)?)?;
        let rhs = compose(&zeta_quotient(n, fm)?, &quotient_map(ModelId::KATensorKa(n), ModelId::KaQuotientOfK(n))?)?;
        Ok((lhs, rhs))
    };
    let (lhs, rhs) = run().map_err(|e| simpforge_core::Counterexample::from_error(0, "zeta descent", &e))?;
    lhs.certify(p_max)?;
    rhs.certify(p_max)?;
    morphisms_equal(&lhs, &rhs, p_max)
}

/// Identity on the `t` chains between two presentations of `k_A^{⊗c}`; every chain of `from`
/// goes to the `t` chain of its representative's factor.
pub fn transport(from: ModelId, to: ModelId) -> Result<Morphism> {
    let dom = model(from)?;
    let cod = model(to)?;
    let mut table = ChainTable::new();
    for k in dom.chain_keys() {
        let r = dom.representative(k).expect("own chain");
        if r.family != Family::T {
            return Err(Error::InvalidParameters(format!("{from} has a free {r} chain")));
        }
        table.insert(k, vec![(BigInt::one(), 0, ChainKey::t(r.factor))]);
    }
    Ok(Morphism::chain_linear(format!("T[{from}->{to}]"), dom, cod, table))
}

fn skip_table(dom: &Presentation, t_max: u32, u_max: u32) -> ChainTable {
    dom.chain_keys()
        .map(|k| {
            let keep = if k.family == Family::T { t_max } else { u_max };
            let a = if k.factor <= keep { k.factor } else { k.factor + 1 };
            (k, vec![(BigInt::one(), 0, ChainKey { family: k.family, factor: a })])
        })
        .collect()
}

fn skip_thresholds(c: u32, r: u32, u_offset: u32, fm: &Formulas) -> Result<(u32, u32)> {
    let big_r = VarRho::new(c)?.apply(r)?;
    let t_max = big_r + u32::from(fm.has(Mutation::SkipThreshold));
    Ok((t_max, big_r - u_offset))
}

fn skip(name: String, dom: ModelId, cod: ModelId, c: u32, r: u32, u_offset: u32, fm: &Formulas) -> Result<Morphism> {
    let (t_max, u_max) = skip_thresholds(c, r, u_offset, fm)?;
    let d = model(dom)?;
    let table = skip_table(&d, t_max, u_max);
    Ok(Morphism::chain_linear(name, d, model(cod)?, table))
}

/// `f̃^(c)_r: K_A^{⊗_{k_A} c} → K_A^{⊗_{k_A} c+1}`.
pub fn f_tilde(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    skip(format!("f~({c},{r})"), ModelId::KATensorKa(c), ModelId::KATensorKa(c + 1), c, r, 1, fm)
}

/// `f̃^(c)_r`'s formulas on `K_A^{⊗c} → K_A^{⊗c+1}/⟨t_{r+2} - u_{r+1}⟩`, for `r ≤ c-1`.
pub fn f_tilde_plain(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    skip(format!("f~'({c},{r})"), ModelId::KATensorA(c), ModelId::FSkipQuotient { c, r }, c, r, 1, fm)
}

/// `f^(c)_r` on the quotient presentations `K_A^{⊗_{k_A} c}/⟨t_1 - u_c⟩`.
pub fn f_skip(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    induced_on_quotients(
        format!("f({c},{r})"),
        &f_tilde(c, r, fm)?,
        model(ModelId::KaQuotientOfK(c))?,
        model(ModelId::KaQuotientOfK(c + 1))?,
    )
}

/// `g̃^(c)_r: K_A ⊗_A k_A^{⊗c-1} → K_A ⊗_A k_A^{⊗c}`.
pub fn g_tilde(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    skip(format!("g~({c},{r})"), ModelId::KATensorAKae(c - 1), ModelId::KATensorAKae(c), c, r, 0, fm)
}

/// `g̃^(c)_r`'s formulas on `K_A^{⊗c} → K_A^{⊗c+1}/⟨t_{r+2} - u_{r+2}⟩`, for `r ≤ c-1`.
pub fn g_tilde_plain(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    skip(format!("g~'({c},{r})"), ModelId::KATensorA(c), ModelId::GSkipQuotient { c, r }, c, r, 0, fm)
}

/// `g^(c)_r` on the quotient presentations `K_A^{⊗c}/⟨t_a - u_a⟩`.
pub fn g_skip(c: u32, r: u32, fm: &Formulas) -> Result<Morphism> {
    induced_on_quotients(
        format!("g({c},{r})"),
        &g_tilde(c, r, fm)?,
        model(ModelId::KaDiagOfK(c))?,
        model(ModelId::KaDiagOfK(c + 1))?,
    )
}

/// Which presentation of `k_A^{⊗c}` a skip map or composite is expressed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    /// The quotient of `K_A^{⊗_{k_A} c}` for `f`, of `K_A^{⊗c}` for `g`.
    Quotient,
    /// The direct tensor product `k_A^{⊗c}`.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Skip {
    F,
    G,
}

impl Skip {
    fn quotient_model(self, c: u32) -> ModelId {
        match self {
            Skip::F => ModelId::KaQuotientOfK(c),
            Skip::G => ModelId::KaDiagOfK(c),
        }
    }

    pub fn map(self, c: u32, r: u32, layer: Layer, fm: &Formulas) -> Result<Morphism> {
        let q = match self {
            Skip::F => f_skip(c, r, fm)?,
            Skip::G => g_skip(c, r, fm)?,
        };
        match layer {
            Layer::Quotient => Ok(q),
            Layer::Direct => {
                let into = transport(ModelId::KaTensor { n: c, m: 1 }, self.quotient_model(c))?;
                let out = transport(self.quotient_model(c + 1), ModelId::KaTensor { n: c + 1, m: 1 })?;
                let name = q.name().to_string();
                Ok(compose_all(&[into, q, out])?.renamed(name))
            }
        }
    }

    pub fn model(self, c: u32, layer: Layer) -> ModelId {
        match layer {
            Layer::Quotient => self.quotient_model(c),
            Layer::Direct => ModelId::KaTensor { n: c, m: 1 },
        }
    }
}

/// A vector `(d_start, d_start+1, …)` with `d_s ∈ [s]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DVector {
    start: u32,
    values: Vec<u32>,
}

impl DVector {
    pub fn new(start: u32, values: Vec<u32>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            let s = start + i as u32;
            if v > s {
                return Err(Error::InvalidParameters(format!("d_{s} = {v} is not in [{s}]")));
            }
        }
        Ok(DVector { start, values })
    }

    /// All vectors with entries indexed by `start..start+len`.
    pub fn all(start: u32, len: u32) -> Vec<DVector> {
        let mut out = vec![Vec::new()];
        for s in start..start + len {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=s).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|values| DVector { start, values }).collect()
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, s: u32) -> Result<u32> {
        s.checked_sub(self.start)
            .and_then(|i| self.values.get(i as usize).copied())
            .ok_or_else(|| Error::InvalidParameters(format!("d_{s} is not supplied by {self}")))
    }

    /// The prefix with entries `start..end`.
    pub fn truncated(&self, end: u32) -> DVector {
        let len = end.saturating_sub(self.start) as usize;
        DVector { start: self.start, values: self.values[..len.min(self.values.len())].to_vec() }
    }
}

impl std::fmt::Display for DVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v: Vec<String> = self.values.iter().map(u32::to_string).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// `𝔣^{[a,b]}_d` or `𝔤^{[a,b]}_d`: `k_A^{⊗a} → k_A^{⊗b}`, the identity when `a = b`.
pub fn skip_composite(kind: Skip, a: u32, b: u32, d: &DVector, layer: Layer, fm: &Formulas) -> Result<Morphism> {
    if a > b || a == 0 {
        return Err(Error::InvalidParameters(format!("composite [{a},{b}]")));
    }
    let letter = if kind == Skip::F { "f" } else { "g" };
    if a == b {
        return Ok(Morphism::identity(model(kind.model(a, layer))?).renamed(format!("{letter}[{a},{a}]")));
    }
    let steps = (a..b).map(|s| kind.map(s, d.get(s)?, layer, fm)).collect::<Result<Vec<_>>>()?;
    Ok(compose_all(&steps)?.renamed(format!("{letter}[{a},{b}]{d}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use simpforge_core::{Polynomial, VarId};

    #[test]
    fn can_examples() {
        let fm = Formulas::default();
        let c = can_map(3, 1, 2, &fm).unwrap();
        assert_eq!(c.image(1, &VarId::t(1, 2)).unwrap(), Polynomial::pi_pow(2) * Polynomial::var(VarId::t(1, 2)));
        assert_eq!(c.image(1, &VarId::t(0, 1)).unwrap(), Polynomial::pi_pow(3));
        assert_eq!(c.certify(3), Ok(()));
        assert!(can_map(1, 2, 1, &fm).is_err());
        assert!(can_map(2, 1, 1, &Formulas::mutated(Mutation::CanExponent)).unwrap().check_well_defined(2).is_err());
    }

    #[test]
    fn rho_examples() {
        let r = rho_action(3, 1, ModelId::KaTensor { n: 3, m: 1 }).unwrap();
        assert_eq!(r.image(1, &VarId::t(1, 1)).unwrap(), Polynomial::var(VarId::t(1, 2)));
        assert_eq!(r.image(1, &VarId::t(1, 3)).unwrap(), Polynomial::var(VarId::t(1, 1)));
        assert!(rho_action(2, 1, ModelId::KaTensor { n: 3, m: 1 }).is_err());
    }

    #[test]
    fn f_tilde_example() {
        let f = f_tilde(2, 0, &Formulas::default()).unwrap();
        let img = |v: VarId| f.image(1, &v).unwrap();
        assert_eq!(img(VarId::t(1, 1)), Polynomial::var(VarId::t(1, 1)));
        assert_eq!(img(VarId::t(1, 2)), Polynomial::var(VarId::t(1, 3)));
        assert_eq!(f.raw(1, &VarId::u(1, 1)).unwrap(), Polynomial::var(VarId::u(1, 2)));
        assert_eq!(f.raw(1, &VarId::u(1, 2)).unwrap(), Polynomial::var(VarId::u(1, 3)));
    }

    #[test]
    fn d_vectors() {
        assert_eq!(DVector::all(1, 2).len(), 6);
        assert!(DVector::new(1, vec![2]).is_err());
        let d = DVector::new(2, vec![1, 3]).unwrap();
        assert_eq!(d.get(3).unwrap(), 3);
        assert!(d.get(1).is_err());
        assert_eq!(d.truncated(3).values(), &[1]);
    }
}
