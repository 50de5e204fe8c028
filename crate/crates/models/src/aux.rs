//! The auxiliary maps around the skip morphisms and the diagrams they sit in.

use crate::formulas::Formulas;
use crate::id::ModelId;
use crate::maps::{
    f_skip, f_tilde, f_tilde_plain, g_skip, g_tilde, g_tilde_plain, model, permute_factors, quotient_map,
    skip_composite, zeta_quotient, DVector, Layer, Skip,
};
use crate::perm::Perm;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use simpforge_core::salg::{compose, compose_all, invert_relabeling, morphisms_equal, ChainKey, ChainTable, Morphism};
use simpforge_core::{Certificate, Counterexample, Result};

/// How the unnamed upper-left arrows of the `r = c` diagrams are read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuxReading {
    /// Every unnamed arrow keeps generator names.
    #[default]
    Literal,
    /// The arrow into the top middle object first reorders the factors of `K_A^{⊗c+1}`
    /// to match the factor order of that object.
    Relabeled,
}

/// One named certificate of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    pub name: String,
    pub result: Certificate,
}

fn lift(name: &str, r: Result<Certificate>) -> DiagramCheck {
    DiagramCheck {
        name: name.to_string(),
        result: r.unwrap_or_else(|e| Err(Counterexample::from_error(0, name, &e))),
    }
}

/// Compare two paths, each given in application order.
fn square(name: &str, lhs: &[Morphism], rhs: &[Morphism], p_max: usize) -> DiagramCheck {
    lift(name, (|| Ok(morphisms_equal(&compose_all(lhs)?, &compose_all(rhs)?, p_max)))())
}

fn simplicial(name: &str, f: &Morphism, p_max: usize) -> DiagramCheck {
    DiagramCheck { name: format!("{name}.simplicial"), result: f.certify(p_max) }
}

fn iso(name: &str, f: &Morphism, p_max: usize) -> Vec<DiagramCheck> {
    let inv = match invert_relabeling(f, format!("{}^-1", f.name())) {
        Ok(inv) => inv,
        Err(e) => return vec![lift(&format!("{name}.inverse"), Err(e))],
    };
    vec![
        simplicial(&format!("{name}^-1"), &inv, p_max),
        square(&format!("{name}.iso.left"), &[inv.clone(), f.clone()], &[Morphism::identity(f.codomain().clone())], p_max),
        square(&format!("{name}.iso.right"), &[f.clone(), inv], &[Morphism::identity(f.domain().clone())], p_max),
    ]
}

fn table_map(name: String, dom: ModelId, cod: ModelId, rows: Vec<(ChainKey, ChainKey)>) -> Result<Morphism> {
    let table: ChainTable = rows.into_iter().map(|(k, v)| (k, vec![(BigInt::one(), 0, v)])).collect();
    Ok(Morphism::chain_linear(name, model(dom)?, model(cod)?, table))
}

fn theta_rows(c: u32) -> Vec<(ChainKey, ChainKey)> {
    (1..=c).flat_map(|a| [(ChainKey::t(a), ChainKey::u(a)), (ChainKey::u(a), ChainKey::t(a + 1))]).collect()
}

/// `ϑ^(c): K_A^{⊗c} → K_A^{⊗c+1}/⟨t_1 - u_{c+1}⟩`.
pub fn vartheta(c: u32) -> Result<Morphism> {
    table_map(format!("vartheta{c}"), ModelId::KATensorA(c), ModelId::KATensorAWrap(c + 1), theta_rows(c))
}

/// `ψ^(c): K_A^{⊗_{k_A} c} → K_A^{⊗c+1}/⟨t_1 - u_{c+1}, u_a - t_a⟩`.
pub fn psi(c: u32) -> Result<Morphism> {
    table_map(format!("psi{c}"), ModelId::KATensorKa(c), ModelId::PhiSource(c), theta_rows(c))
}

/// `φ^(c): K_A^{⊗c+1}/⟨t_1 - u_{c+1}, u_a - t_a⟩ → K_A^{⊗_{k_A} c+1}`.
pub fn varphi(c: u32) -> Result<Morphism> {
    let mut rows: Vec<_> = (1..=c + 1).map(|a| (ChainKey::t(a), ChainKey::u(a))).collect();
    rows.push((ChainKey::u(1), ChainKey::t(1)));
    rows.extend((2..=c).map(|a| (ChainKey::u(a), ChainKey::t(a + 1))));
    rows.push((ChainKey::u(c + 1), ChainKey::t(2)));
    table_map(format!("varphi{c}"), ModelId::PhiSource(c), ModelId::KATensorKa(c + 1), rows)
}

/// `ω^(c): K_A^{⊗c} → K_A^{⊗c+1}/⟨t_{c+1} - u_{c+1}⟩`.
pub fn omega(c: u32) -> Result<Morphism> {
    Ok(quotient_map(ModelId::KATensorA(c), ModelId::KATensorATop(c + 1))?.renamed(format!("omega{c}")))
}

/// `γ^(c): k_A^{⊗c-1} ⊗_A K_A → K_A^{⊗c+1}/⟨t_{c+1} - u_{c+1}, u_a - t_a⟩`.
pub fn gamma(c: u32) -> Result<Morphism> {
    Ok(quotient_map(ModelId::KaeTensorAKA(c - 1), ModelId::UpsilonSource(c))?.renamed(format!("gamma{c}")))
}

/// `υ^(c)`: factor `a ↦ ρ²_{c+1}(a)`.
pub fn upsilon(c: u32) -> Result<Morphism> {
    permute_factors(format!("upsilon{c}"), ModelId::UpsilonSource(c), ModelId::KATensorAKae(c), &Perm::rho(c + 1).pow(2))
}

/// `τ^(c)`: factor `a ↦ ρ^{-1}_{c+1}(a)`.
pub fn tau(c: u32) -> Result<Morphism> {
    permute_factors(format!("tau{c}"), ModelId::KaeTensorAKA(c), ModelId::UpsilonSource(c), &Perm::rho(c + 1).inverse())
}

/// `ρ_c: k_A^{⊗c-1} ⊗_A K_A → K_A ⊗_A k_A^{⊗c-1}`.
pub fn rho_swap(c: u32) -> Result<Morphism> {
    permute_factors(format!("rho{c}"), ModelId::KaeTensorAKA(c - 1), ModelId::KATensorAKae(c - 1), &Perm::rho(c))
}

/// The reordering of `K_A^{⊗c+1}` used by the relabeled reading of the `φ` diagram.
pub fn phi_relabeling(c: u32) -> Result<Morphism> {
    let mut rows = vec![
        (ChainKey::t(1), ChainKey::u(1)),
        (ChainKey::t(2), ChainKey::t(1)),
        (ChainKey::u(1), ChainKey::u(c + 1)),
        (ChainKey::u(c + 1), ChainKey::t(c + 1)),
    ];
    rows.extend((2..=c).map(|a| (ChainKey::t(a + 1), ChainKey::t(a))));
    rows.extend((2..=c).map(|a| (ChainKey::u(a), ChainKey::u(a))));
    table_map(format!("lambda{c}"), ModelId::KATensorA(c + 1), ModelId::KATensorA(c + 1), rows)
}

/// The reordering of `K_A^{⊗c+1}` used by the relabeled reading of the `υ` diagram.
pub fn upsilon_relabeling(c: u32) -> Result<Morphism> {
    permute_factors(format!("lambda'{c}"), ModelId::KATensorA(c + 1), ModelId::KATensorA(c + 1), &Perm::rho(c + 1).inverse())
}

/// The `r = c` diagram for `f̃^(c)_c` with `ϑ`, `φ`, `ψ`.
pub fn phi_diagram(c: u32, p_max: usize, reading: AuxReading, fm: &Formulas) -> Result<Vec<DiagramCheck>> {
    let (phi, th, ps) = (varphi(c)?, vartheta(c)?, psi(c)?);
    let phi_inv = invert_relabeling(&phi, format!("varphi{c}^-1"))?;
    let ft = f_tilde(c, c, fm)?;
    let fq = f_skip(c, c, fm)?;
    let q_top = quotient_map(ModelId::KATensorA(c + 1), ModelId::KATensorAWrap(c + 1))?;
    let top_left = match reading {
        AuxReading::Literal => vec![q_top],
        AuxReading::Relabeled => vec![phi_relabeling(c)?, q_top],
    };
    let v12 = quotient_map(ModelId::KATensorAWrap(c + 1), ModelId::PhiSource(c))?;
    let v11 = quotient_map(ModelId::KATensorA(c + 1), ModelId::KATensorKa(c + 1))?;
    let v13 = quotient_map(ModelId::KATensorA(c), ModelId::KATensorKa(c))?;
    let q_hi = quotient_map(ModelId::KATensorKa(c + 1), ModelId::KaQuotientOfK(c + 1))?;
    let q_lo = quotient_map(ModelId::KATensorKa(c), ModelId::KaQuotientOfK(c))?;
    let id_mid = Morphism::identity(model(ModelId::KATensorKa(c + 1))?);
    let mut out = vec![
        simplicial("vartheta", &th, p_max),
        simplicial("psi", &ps, p_max),
        simplicial("varphi", &phi, p_max),
    ];
    out.extend(iso("varphi", &phi, p_max));
    let mut s1_lhs = top_left;
    s1_lhs.push(v12.clone());
    out.push(square("square.top-left", &s1_lhs, &[v11, phi_inv.clone()], p_max));
    out.push(square("square.top-right", &[th, v12], &[v13, ps.clone()], p_max));
    out.push(square("square.middle-left", &[phi_inv, phi.clone()], &[id_mid.clone(), id_mid.clone()], p_max));
    out.push(square("square.middle-right", &[ps, phi], &[ft.clone()], p_max));
    out.push(square("square.bottom-left", &[id_mid.clone(), q_hi.clone()], &[q_hi.clone(), Morphism::identity(fq.codomain().clone())], p_max));
    out.push(square("square.bottom-right", &[ft, q_hi], &[q_lo, fq], p_max));
    Ok(out)
}

/// The `r = c` diagram for `g̃^(c)_c` with `ω`, `γ`, `υ`, `τ`, `ρ_c`, `ρ_{c+1}`.
pub fn upsilon_diagram(c: u32, p_max: usize, reading: AuxReading, fm: &Formulas) -> Result<Vec<DiagramCheck>> {
    let (ups, ta, om, ga) = (upsilon(c)?, tau(c)?, omega(c)?, gamma(c)?);
    let rho_hi = rho_swap(c + 1)?;
    let rho_lo = rho_swap(c)?;
    let gt = g_tilde(c, c, fm)?;
    let gq = g_skip(c, c, fm)?;
    let q_top = quotient_map(ModelId::KATensorA(c + 1), ModelId::KATensorATop(c + 1))?;
    let top_left = match reading {
        AuxReading::Literal => vec![q_top],
        AuxReading::Relabeled => vec![upsilon_relabeling(c)?, q_top],
    };
    let v12 = quotient_map(ModelId::KATensorATop(c + 1), ModelId::UpsilonSource(c))?;
    let v11 = quotient_map(ModelId::KATensorA(c + 1), ModelId::KaeTensorAKA(c))?;
    let v13 = quotient_map(ModelId::KATensorA(c), ModelId::KaeTensorAKA(c - 1))?;
    let q_hi = quotient_map(ModelId::KATensorAKae(c), ModelId::KaDiagOfK(c + 1))?;
    let q_lo = quotient_map(ModelId::KATensorAKae(c - 1), ModelId::KaDiagOfK(c))?;
    let id_mid = Morphism::identity(model(ModelId::KATensorAKae(c))?);
    let mut out = vec![
        simplicial("omega", &om, p_max),
        simplicial("gamma", &ga, p_max),
        simplicial("upsilon", &ups, p_max),
        simplicial("tau", &ta, p_max),
        simplicial("rho_c", &rho_lo, p_max),
        simplicial("rho_c+1", &rho_hi, p_max),
    ];
    out.extend(iso("upsilon", &ups, p_max));
    let mut s1_lhs = top_left;
    s1_lhs.push(v12.clone());
    out.push(square("square.top-left", &s1_lhs, &[v11, ta.clone()], p_max));
    out.push(square("square.top-right", &[om, v12], &[v13, ga.clone()], p_max));
    out.push(square("square.middle-left", &[ta, ups.clone()], &[rho_hi, id_mid.clone()], p_max));
    out.push(square("square.middle-right", &[ga, ups], &[rho_lo, gt.clone()], p_max));
    out.push(square("square.bottom-left", &[id_mid, q_hi.clone()], &[q_hi.clone(), Morphism::identity(gq.codomain().clone())], p_max));
    out.push(square("square.bottom-right", &[gt, q_hi], &[q_lo, gq], p_max));
    Ok(out)
}

/// The `r ≤ c-1` diagram for either skip map.
pub fn skip_diagram(kind: Skip, c: u32, r: u32, p_max: usize, fm: &Formulas) -> Result<Vec<DiagramCheck>> {
    let (plain, tilde, induced, top_mid, cover_hi, cover_lo) = match kind {
        Skip::F => (
            f_tilde_plain(c, r, fm)?,
            f_tilde(c, r, fm)?,
            f_skip(c, r, fm)?,
            ModelId::FSkipQuotient { c, r },
            ModelId::KATensorKa(c + 1),
            ModelId::KATensorKa(c),
        ),
        Skip::G => (
            g_tilde_plain(c, r, fm)?,
            g_tilde(c, r, fm)?,
            g_skip(c, r, fm)?,
            ModelId::GSkipQuotient { c, r },
            ModelId::KATensorAKae(c),
            ModelId::KATensorAKae(c - 1),
        ),
    };
    let (quot_hi, quot_lo) = (kind.model(c + 1, Layer::Quotient), kind.model(c, Layer::Quotient));
    let big = ModelId::KATensorA(c + 1);
    let q_top = quotient_map(big, top_mid)?;
    let v12 = quotient_map(top_mid, cover_hi)?;
    let v11 = quotient_map(big, cover_hi)?;
    let v13 = quotient_map(ModelId::KATensorA(c), cover_lo)?;
    let id_mid = Morphism::identity(model(cover_hi)?);
    let q_hi = quotient_map(cover_hi, quot_hi)?;
    let q_lo = quotient_map(cover_lo, quot_lo)?;
    Ok(vec![
        simplicial("tilde-plain", &plain, p_max),
        simplicial("tilde", &tilde, p_max),
        simplicial("induced", &induced, p_max),
        square("square.top-left", &[q_top, v12.clone()], &[v11, id_mid.clone()], p_max),
        square("square.top-right", &[plain, v12], &[v13, tilde.clone()], p_max),
        square("square.bottom-left", &[id_mid, q_hi.clone()], &[q_hi.clone(), Morphism::identity(model(quot_hi)?)], p_max),
        square("square.bottom-right", &[tilde, q_hi], &[q_lo, induced], p_max),
    ])
}

/// Every auxiliary certificate for a given `c`, under the given reading of the `r = c` diagrams.
pub fn aux_diagrams_check(c: u32, p_max: usize, reading: AuxReading, fm: &Formulas) -> Vec<DiagramCheck> {
    let mut out = Vec::new();
    let mut add = |prefix: String, r: Result<Vec<DiagramCheck>>| match r {
        Ok(v) => out.extend(v.into_iter().map(|d| DiagramCheck { name: format!("{prefix}.{}", d.name), ..d })),
        Err(e) => out.push(lift(&prefix, Err(e))),
    };
    add(format!("phi.c={c}"), phi_diagram(c, p_max, reading, fm));
    add(format!("upsilon.c={c}"), upsilon_diagram(c, p_max, reading, fm));
    for r in 0..c {
        add(format!("fskip.c={c}.r={r}"), skip_diagram(Skip::F, c, r, p_max, fm));
        add(format!("gskip.c={c}.r={r}"), skip_diagram(Skip::G, c, r, p_max, fm));
    }
    out
}

/// `ζ_{c+1} ∘ f^(c)_r = g^(c)_r ∘ ζ_c`.
pub fn f_vs_g(c: u32, r: u32, p_max: usize, fm: &Formulas) -> Certificate {
    let run = || -> Result<Certificate> {
        let lhs = compose(&zeta_quotient(c + 1, fm)?, &f_skip(c, r, fm)?)?;
        let rhs = compose(&g_skip(c, r, fm)?, &zeta_quotient(c, fm)?)?;
        Ok(morphisms_equal(&lhs, &rhs, p_max))
    };
    run().unwrap_or_else(|e| Err(Counterexample::from_error(0, "f vs g", &e)))
}

/// `ζ_b ∘ 𝔣^{[a,b]}_d = 𝔤^{[a,b]}_d ∘ ζ_a`.
pub fn f_vs_g_composite(a: u32, b: u32, d: &DVector, p_max: usize, fm: &Formulas) -> Certificate {
    let run = || -> Result<Certificate> {
        let f = skip_composite(Skip::F, a, b, d, Layer::Quotient, fm)?;
        let g = skip_composite(Skip::G, a, b, d, Layer::Quotient, fm)?;
        let lhs = compose(&zeta_quotient(b, fm)?, &f)?;
        let rhs = compose(&g, &zeta_quotient(a, fm)?)?;
        Ok(morphisms_equal(&lhs, &rhs, p_max))
    };
    run().unwrap_or_else(|e| Err(Counterexample::from_error(0, "f vs g composite", &e)))
}

/// `x(c, 0) = x(c, c)` for either skip map.
pub fn skip_wraps(kind: Skip, c: u32, p_max: usize, fm: &Formulas) -> Certificate {
    let run = || -> Result<Certificate> {
        Ok(morphisms_equal(&kind.map(c, 0, Layer::Quotient, fm)?, &kind.map(c, c, Layer::Quotient, fm)?, p_max))
    };
    run().unwrap_or_else(|e| Err(Counterexample::from_error(0, "skip wrap", &e)))
}
