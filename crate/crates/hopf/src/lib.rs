//! The Hopf algebroid maps on `K_A` and the pure-characteristic comparison.
//!
//! Every map is chain-linear on the cofibrant models. The pure-characteristic squares are
//! checked with domain `k_A(1)` specialized at `π = 0`. They are checked twice: against
//! codomains over `ℤ[π]`, and against codomains specialized at `π = 0`.

use num_bigint::BigInt;
use num_traits::One;
use simpforge_core::salg::{compose, morphisms_equal, ChainKey, ChainTable, Morphism, Presentation};
use simpforge_core::{Certificate, Counterexample, Error, Polynomial, Result};
use simpforge_doldkan::{induced_map_on_homology, Weights};
use simpforge_models::maps::model;
use simpforge_models::ModelId;
use std::sync::Arc;

/// A named certificate.
#[derive(Clone, Debug)]
pub struct NamedCheck {
    pub name: String,
    pub result: Certificate,
}

impl NamedCheck {
    fn new(name: impl Into<String>, result: Certificate) -> Self {
        NamedCheck { name: name.into(), result }
    }
}

fn table(rows: &[(ChainKey, &[(i64, ChainKey)])]) -> ChainTable {
    rows.iter()
        .map(|(k, img)| (*k, img.iter().map(|(c, y)| (BigInt::from(*c), 0, *y)).collect()))
        .collect()
}

fn linear(name: &str, dom: &Arc<Presentation>, cod: &Arc<Presentation>, rows: &[(ChainKey, &[(i64, ChainKey)])]) -> Morphism {
    Morphism::chain_linear(name, dom.clone(), cod.clone(), table(rows))
}

fn rename(name: &str, dom: &Arc<Presentation>, cod: &Arc<Presentation>, pairs: &[(ChainKey, ChainKey)]) -> Morphism {
    let t: ChainTable = pairs.iter().map(|(a, b)| (*a, vec![(BigInt::one(), 0, *b)])).collect();
    Morphism::chain_linear(name, dom.clone(), cod.clone(), t)
}

const T1: ChainKey = ChainKey { family: simpforge_core::Family::T, factor: 1 };
const U1: ChainKey = ChainKey { family: simpforge_core::Family::U, factor: 1 };
const T2: ChainKey = ChainKey { family: simpforge_core::Family::T, factor: 2 };
const U2: ChainKey = ChainKey { family: simpforge_core::Family::U, factor: 2 };
const T3: ChainKey = ChainKey { family: simpforge_core::Family::T, factor: 3 };
const U3: ChainKey = ChainKey { family: simpforge_core::Family::U, factor: 3 };

/// Source, target, comultiplication, counit and antipode.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub sigma: Morphism,
    pub tau: Morphism,
    pub nabla: Morphism,
    pub xi: Morphism,
    pub antipode: Morphism,
}

impl HopfData {
    pub fn all(&self) -> [&Morphism; 5] {
        [&self.sigma, &self.tau, &self.nabla, &self.xi, &self.antipode]
    }
}

pub fn build_hopf() -> Result<HopfData> {
    let ka = model(ModelId::KaM(1))?;
    let k = model(ModelId::KA)?;
    let k2 = model(ModelId::KATensorKa(2))?;
    Ok(HopfData {
        sigma: rename("sigma", &ka, &k, &[(T1, T1)]),
        tau: rename("tau", &ka, &k, &[(T1, U1)]),
        nabla: rename("nabla", &k, &k2, &[(T1, T1), (U1, U2)]),
        xi: rename("xi", &k, &ka, &[(T1, T1), (U1, T1)]),
        antipode: rename("alpha", &k, &k, &[(T1, U1), (U1, T1)]),
    })
}

fn equal(name: &str, f: Result<Morphism>, g: Result<Morphism>, p_max: usize) -> NamedCheck {
    let r = match (f, g) {
        (Ok(f), Ok(g)) => morphisms_equal(&f, &g, p_max),
        (Err(e), _) | (_, Err(e)) => Err(Counterexample::from_error(0, name, &e)),
    };
    NamedCheck::new(name, r)
}

/// Certificates of the five maps followed by the axiom list.
pub fn check_hopf_axioms(p_max: usize) -> Result<Vec<NamedCheck>> {
    let h = build_hopf()?;
    let k = model(ModelId::KA)?;
    let k2 = model(ModelId::KATensorKa(2))?;
    let k3 = model(ModelId::KATensorKa(3))?;
    let ka = model(ModelId::KaM(1))?;
    let nabla_id = rename("nabla*id", &k2, &k3, &[(T1, T1), (U1, U2), (T2, T3), (U2, U3)]);
    let id_nabla = rename("id*nabla", &k2, &k3, &[(T1, T1), (U1, U1), (T2, T2), (U2, U3)]);
    let xi_id = rename("xi*id", &k2, &k, &[(T1, T1), (U1, T1), (T2, T1), (U2, U1)]);
    let id_xi = rename("id*xi", &k2, &k, &[(T1, T1), (U1, U1), (T2, U1), (U2, U1)]);
    let sigma_left = rename("sigma_1", &ka, &k2, &[(T1, T1)]);
    let tau_right = rename("tau_2", &ka, &k2, &[(T1, U2)]);
    let id_k = Morphism::identity(k.clone());
    let id_ka = Morphism::identity(ka.clone());

    let mut out: Vec<NamedCheck> = h
        .all()
        .iter()
        .map(|m| NamedCheck::new(format!("hopf.certify.{}", m.name()), m.certify(p_max)))
        .collect();
    out.push(equal("hopf.coassoc", compose(&nabla_id, &h.nabla), compose(&id_nabla, &h.nabla), p_max));
    out.push(equal("hopf.counit.left", compose(&xi_id, &h.nabla), Ok(id_k.clone()), p_max));
    out.push(equal("hopf.counit.right", compose(&id_xi, &h.nabla), Ok(id_k.clone()), p_max));
    out.push(equal("hopf.counit.source", compose(&h.xi, &h.sigma), Ok(id_ka.clone()), p_max));
    out.push(equal("hopf.counit.target", compose(&h.xi, &h.tau), Ok(id_ka), p_max));
    out.push(equal("hopf.source", compose(&h.nabla, &h.sigma), Ok(sigma_left), p_max));
    out.push(equal("hopf.target", compose(&h.nabla, &h.tau), Ok(tau_right), p_max));
    out.push(equal("hopf.antipode.involution", compose(&h.antipode, &h.antipode), Ok(id_k), p_max));
    out.push(equal("hopf.antipode.source", compose(&h.antipode, &h.sigma), Ok(h.tau.clone()), p_max));
    out.push(equal("hopf.antipode.target", compose(&h.antipode, &h.tau), Ok(h.sigma.clone()), p_max));
    Ok(out)
}

/// Whether the codomains of the pure-characteristic maps are over `ℤ[π]` or specialized at `π = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodomainBase {
    Generic,
    PiZero,
}

/// The maps of the pure-characteristic comparison.
#[derive(Clone, Debug)]
pub struct PureChar {
    /// `ι: t ↦ t − u`.
    pub iota: Morphism,
    /// `∇̄: t ↦ t⊗1 + 1⊗t`.
    pub nabla_bar: Morphism,
    /// `ξ̄: t ↦ 0`, followed by the unit into `k_A(1)`.
    pub xi_bar_unit: Morphism,
    /// `ᾱ: t ↦ −t`.
    pub alpha_bar: Morphism,
    /// `ι ⊗ ι`.
    pub iota2: Morphism,
    /// Factor swap on the domain tensor square.
    pub swap: Morphism,
    pub nabla: Morphism,
    pub xi: Morphism,
    pub antipode: Morphism,
}

fn at(base: CodomainBase, id: ModelId) -> Result<Arc<Presentation>> {
    let p = id.build()?;
    Ok(Arc::new(match base {
        CodomainBase::Generic => p,
        CodomainBase::PiZero => {
            let name = format!("{}|pi=0", p.name());
            p.specialize_pi_zero(name)
        }
    }))
}

/// The comparison maps with domain `k_A(1)` specialized at `π = 0` (or left generic when `domain_generic`).
pub fn build_pure_char(base: CodomainBase, domain_generic: bool) -> Result<PureChar> {
    let dom_base = if domain_generic { CodomainBase::Generic } else { CodomainBase::PiZero };
    let k0 = at(dom_base, ModelId::KaM(1))?;
    let k0_2 = at(dom_base, ModelId::KaTensor { n: 2, m: 1 })?;
    let k = at(base, ModelId::KA)?;
    let k2 = at(base, ModelId::KATensorKa(2))?;
    let ka = at(base, ModelId::KaM(1))?;
    let unit_dom = Arc::new(Presentation::constant("Z").specialize_pi_zero("Z"));
    let xi_bar = Morphism::chain_linear("xi_bar", k0.clone(), unit_dom.clone(), [(T1, vec![])].into_iter().collect());
    let unit = Morphism::chain_linear("unit", unit_dom, ka.clone(), ChainTable::new());
    Ok(PureChar {
        iota: linear("iota", &k0, &k, &[(T1, &[(1, T1), (-1, U1)])]),
        nabla_bar: linear("nabla_bar", &k0, &k0_2, &[(T1, &[(1, T1), (1, T2)])]),
        xi_bar_unit: compose(&unit, &xi_bar)?,
        alpha_bar: linear("alpha_bar", &k0, &k0, &[(T1, &[(-1, T1)])]),
        iota2: linear("iota*iota", &k0_2, &k2, &[(T1, &[(1, T1), (-1, U1)]), (T2, &[(1, T2), (-1, U2)])]),
        swap: rename("swap", &k0_2, &k0_2, &[(T1, T2), (T2, T1)]),
        nabla: rename("nabla", &k, &k2, &[(T1, T1), (U1, U2)]),
        xi: rename("xi", &k, &ka, &[(T1, T1), (U1, T1)]),
        antipode: rename("alpha", &k, &k, &[(T1, U1), (U1, T1)]),
    })
}

/// The lemma squares, cocommutativity, and the equivalence clause via homology.
pub fn pure_char_check(p_max: usize, w_max: u32) -> Result<Vec<NamedCheck>> {
    let mut out = Vec::new();
    for base in [CodomainBase::Generic, CodomainBase::PiZero] {
        let suffix = match base {
            CodomainBase::Generic => "",
            CodomainBase::PiZero => ".pi0-codomain",
        };
        let pc = build_pure_char(base, false)?;
        let certify = [&pc.iota, &pc.nabla_bar, &pc.xi_bar_unit, &pc.alpha_bar, &pc.iota2, &pc.swap]
            .iter()
            .try_for_each(|m| m.certify(p_max));
        out.push(NamedCheck::new(format!("hopf.purechar.certify{suffix}"), certify));
        out.push(equal(
            &format!("hopf.purechar.comult{suffix}"),
            compose(&pc.iota2, &pc.nabla_bar),
            compose(&pc.nabla, &pc.iota),
            p_max,
        ));
        out.push(equal(&format!("hopf.purechar.counit{suffix}"), compose(&pc.xi, &pc.iota), Ok(pc.xi_bar_unit.clone()), p_max));
        out.push(equal(
            &format!("hopf.purechar.antipode{suffix}"),
            compose(&pc.antipode, &pc.iota),
            compose(&pc.iota, &pc.alpha_bar),
            p_max,
        ));
        if base == CodomainBase::Generic {
            out.push(equal("hopf.purechar.cocommutative", compose(&pc.swap, &pc.nabla_bar), Ok(pc.nabla_bar.clone()), p_max));
            out.push(NamedCheck::new("hopf.purechar.equivalence", equivalence(&pc.iota, p_max, w_max)));
        }
    }
    Ok(out)
}

/// `H_q(ι)` is an isomorphism for every weight `≤ w_max` and degree `≤ p_max − 1`.
pub fn equivalence(iota: &Morphism, p_max: usize, w_max: u32) -> Certificate {
    for w in 0..=w_max {
        for q in 0..p_max {
            let f = induced_map_on_homology(iota, &Weights::PerChain, w, q)
                .map_err(|e| Counterexample::new(q, format!("w={w}"), "H(iota)", e.to_string(), "-"))?;
            if !f.is_iso() {
                return Err(Counterexample::new(
                    q,
                    format!("w={w} H_{q}(iota)"),
                    iota.name(),
                    format!("{} -> {} by {}", f.source, f.target, f.matrix.to_string().trim()),
                    "an isomorphism",
                ));
            }
        }
    }
    Ok(())
}

/// The first failure of a levelwise map to commute with a face: `d_i(F x) − F(d_i x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub level: usize,
    pub face: usize,
    pub generator: String,
    pub value: Polynomial,
}

fn face_discrepancy(f: &Morphism, p_max: usize) -> Result<Option<Discrepancy>> {
    for p in 1..=p_max {
        for g in f.domain().free_generators(p) {
            let x = Polynomial::var(g.clone());
            let fx = f.image(p, &g)?;
            for i in 0..=p {
                let lhs = f.codomain().face(p, i, &fx)?;
                let rhs = f.eval(p - 1, &f.domain().face(p, i, &x)?)?;
                let value = lhs - rhs;
                if !value.is_zero() {
                    return Ok(Some(Discrepancy { level: p, face: i, generator: g.to_string(), value }));
                }
            }
        }
    }
    Ok(None)
}

/// With `π` generic the two routes around the comultiplication square agree levelwise but are not
/// simplicial; the first face discrepancy is returned.
pub fn generic_pi_discrepancy(p_max: usize) -> Result<(Certificate, Option<Discrepancy>)> {
    let pc = build_pure_char(CodomainBase::Generic, true)?;
    let right = compose(&pc.iota2, &pc.nabla_bar)?;
    let down = compose(&pc.nabla, &pc.iota)?;
    let levelwise = morphisms_equal(&right, &down, p_max);
    Ok((levelwise, face_discrepancy(&down, p_max)?))
}

/// Passes when the generic-`π` discrepancy exists, is nonzero and is divisible by `π`.
pub fn generic_pi_check(p_max: usize) -> Certificate {
    let (levelwise, d) = generic_pi_discrepancy(p_max).map_err(|e| Counterexample::from_error(0, "generic pi", &e))?;
    levelwise?;
    match d {
        None => Err(Counterexample::new(p_max, "generic pi", "-", "0", "a nonzero multiple of pi")),
        Some(d) if !d.value.divisible_by_pi() => Err(Counterexample::new(
            d.level,
            format!("d_{}", d.face),
            d.generator,
            d.value,
            "a multiple of pi",
        )),
        Some(_) => Ok(()),
    }
}

/// The presentation errors raised while building maps are surfaced as failed checks.
pub fn as_checks(name: &str, r: Result<Vec<NamedCheck>>) -> Vec<NamedCheck> {
    r.unwrap_or_else(|e: Error| vec![NamedCheck::new(name, Err(Counterexample::from_error(0, name, &e)))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use simpforge_core::VarId;

    #[test]
    fn hopf_axioms_hold() {
        for c in check_hopf_axioms(3).unwrap() {
            assert!(c.result.is_ok(), "{}: {:?}", c.name, c.result);
        }
    }

    #[test]
    fn pure_char_holds() {
        for c in pure_char_check(3, 4).unwrap() {
            assert!(c.result.is_ok(), "{}: {:?}", c.name, c.result);
        }
    }

    #[test]
    fn comult_square_on_t1() {
        let pc = build_pure_char(CodomainBase::Generic, false).unwrap();
        let x = VarId::t(1, 1);
        let right = compose(&pc.iota2, &pc.nabla_bar).unwrap().image(1, &x).unwrap();
        let want = Polynomial::var(VarId::t(1, 1)) - Polynomial::var(VarId::u(1, 2));
        assert_eq!(right, want);
    }

    #[test]
    fn generic_pi_fails_by_a_multiple_of_pi() {
        let (levelwise, d) = generic_pi_discrepancy(3).unwrap();
        assert!(levelwise.is_ok());
        let d = d.unwrap();
        assert_eq!((d.level, d.face), (1, 0));
        assert_eq!(d.value, -Polynomial::pi());
        assert!(generic_pi_check(3).is_ok());
    }

    #[test]
    fn corrupted_iota_breaks_the_comult_square() {
        let pc = build_pure_char(CodomainBase::Generic, false).unwrap();
        let bad = linear("iota'", pc.iota.domain(), pc.iota.codomain(), &[(T1, &[(1, T1)])]);
        let r = morphisms_equal(&compose(&pc.iota2, &pc.nabla_bar).unwrap(), &compose(&pc.nabla, &bad).unwrap(), 2);
        assert!(r.is_err());
    }

    #[test]
    fn specialized_codomain_has_larger_h1() {
        let pc = build_pure_char(CodomainBase::PiZero, false).unwrap();
        let f = induced_map_on_homology(&pc.iota, &Weights::PerChain, 1, 1).unwrap();
        assert_eq!(f.target.rank, 2);
        assert!(!f.is_iso());
    }
}
