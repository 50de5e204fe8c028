//! Explicit coherent homotopies between the `k_A` models and their certification.
//!
//! [`Homotopies`] builds `h̃^(n-1)`, `𝔥^(n-1)`, `𝔨^(n-1)` and the master homotopies `ℋ^(k)_m`, `𝒦^(k)_m`
//! under a fixed [`Formulas`] configuration, memoizing the building blocks so that the many
//! parameter tuples of a suite share generator caches.

use serde::{Deserialize, Serialize};
use simpforge_core::salg::{
    compose, compose_all, label_pushforward, morphisms_equal, simplex_tensor_morphism, vertex_restriction, Morphism,
    Presentation,
};
use simpforge_core::simplex::{compose as compose_maps, delta, s_alpha, MonotoneMap};
use simpforge_core::{Certificate, Counterexample, Error, Polynomial, Result, VarId};
use simpforge_models::maps::{can_between, can_map, factor_inclusion, model, rho_action, skip_composite, transport, zeta_quotient};
use simpforge_models::{DVector, Formulas, HReading, Layer, ModelId, Mutation, Perm, Skip, TReading};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Which family of master homotopies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Master {
    /// `ℋ`, with `𝔣`-composites.
    H,
    /// `𝒦`, with `𝔤`-composites.
    K,
}

impl Master {
    fn skip(self) -> Skip {
        match self {
            Master::H => Skip::F,
            Master::K => Skip::G,
        }
    }
}

/// Parameters `(n, m, k, d)` of a master homotopy; `d = (d_{m+1}, …, d_{m+k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyParams {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub d: DVector,
}

impl HomotopyParams {
    pub fn new(n: u32, m: u32, k: u32, d: DVector) -> Result<Self> {
        if n < m + k {
            return Err(Error::InvalidParameters(format!("n = {n} < m + k = {}", m + k)));
        }
        if d.start() != m + 1 || d.values().len() != k as usize {
            return Err(Error::InvalidParameters(format!("d = {d} must list d_{}..d_{}", m + 1, m + k)));
        }
        Ok(HomotopyParams { n, m, k, d })
    }

    /// The parameters of the `(k-1)` instance on the top row of the compatibility diagram.
    pub fn previous(&self) -> Result<Self> {
        if self.k == 0 || self.n == 0 {
            return Err(Error::InvalidParameters("no previous instance for k = 0".into()));
        }
        HomotopyParams::new(self.n - 1, self.m, self.k - 1, self.d.truncated(self.m + self.k))
    }
}

impl std::fmt::Display for HomotopyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m={}.k={}.n={}.d={}", self.m, self.k, self.n, self.d)
    }
}

/// `Δ^k ⊗ (Δ^m ⊗ k_A(big_n))`.
pub fn master_domain(big_n: u32, m: u32, k: u32) -> Result<Presentation> {
    Ok(ModelId::KaM(big_n).build()?.simplex_tensor(m).simplex_tensor(k))
}

/// `𝔦^{[a,b]}_d = δ^b_{d_b} ∘ … ∘ δ^{a+1}_{d_{a+1}}: [a] → [b]`.
pub fn iota_map(a: u32, b: u32, d: &DVector) -> Result<MonotoneMap> {
    let mut acc = MonotoneMap::identity(a);
    for s in a + 1..=b {
        acc = compose_maps(&delta(s, d.get(s)?)?, &acc)?;
    }
    Ok(acc)
}

/// Builder and memo table for the homotopies under one formula configuration.
pub struct Homotopies {
    fm: Formulas,
    memo: Mutex<HashMap<String, Morphism>>,
}

impl Homotopies {
    pub fn new(fm: Formulas) -> Self {
        Homotopies { fm, memo: Mutex::default() }
    }

    pub fn formulas(&self) -> &Formulas {
        &self.fm
    }

    fn memo(&self, key: String, build: impl FnOnce() -> Result<Morphism>) -> Result<Morphism> {
        if let Some(m) = self.memo.lock().expect("memo").get(&key) {
            return Ok(m.clone());
        }
        let m = build()?;
        self.memo.lock().expect("memo").insert(key, m.clone());
        Ok(m)
    }

    /// `h̃^(n-1): Δ^{n-1} ⊗ k_A^{⊗n}(n) → k_A^{⊗n}`.
    pub fn h_tilde(&self, n: u32) -> Result<Morphism> {
        if n == 0 {
            return Err(Error::InvalidParameters("h~ needs n ≥ 1".into()));
        }
        self.memo(format!("h~{n}"), || {
            let dom = Arc::new(ModelId::KaTensor { n, m: n }.build()?.simplex_tensor(n - 1));
            let cod = model(ModelId::KaTensor { n, m: 1 })?;
            let fm = self.fm;
            let rho = if fm.has(Mutation::RhoSquared) { Perm::rho(n).pow(2) } else { Perm::rho(n) };
            let c2 = cod.clone();
            Ok(Morphism::new(format!("h~({n})"), dom, cod, move |p, x| h_tilde_formula(&c2, &rho, n, p, x, &fm)))
        })
    }

    /// `𝔥^(n-1) = h̃^(n-1) ∘ (id ⊗ incl_1): Δ^{n-1} ⊗ k_A(n) → k_A^{⊗n}`.
    pub fn h_small(&self, n: u32) -> Result<Morphism> {
        self.memo(format!("h{n}"), || {
            let incl = simplex_tensor_morphism(n - 1, &factor_inclusion(n, 1, n)?);
            Ok(compose(&self.h_tilde(n)?, &incl)?.renamed(format!("h({n})")))
        })
    }

    /// `𝔨^(n-1)`: `𝔥^(n-1)` followed by `ζ_n`, read on the direct presentation of `k_A^{⊗n}`.
    pub fn k_small(&self, n: u32) -> Result<Morphism> {
        self.memo(format!("k{n}"), || {
            let zeta = self.zeta_direct(n)?;
            Ok(compose(&zeta, &self.h_small(n)?)?.renamed(format!("k({n})")))
        })
    }

    /// `ζ_n` transported to `k_A^{⊗n} → k_A^{⊗n}`.
    pub fn zeta_direct(&self, n: u32) -> Result<Morphism> {
        self.memo(format!("zeta{n}"), || {
            let direct = ModelId::KaTensor { n, m: 1 };
            compose_all(&[
                transport(direct, ModelId::KaQuotientOfK(n))?,
                zeta_quotient(n, &self.fm)?,
                transport(ModelId::KaDiagOfK(n), direct)?,
            ])
        })
    }

    /// `𝔣^{[a,b]}_d` or `𝔤^{[a,b]}_d` on the direct presentations.
    pub fn composite(&self, kind: Skip, a: u32, b: u32, d: &DVector) -> Result<Morphism> {
        let key = format!("{kind:?}[{a},{b}]{}", d.truncated(b));
        self.memo(key, || skip_composite(kind, a, b, d, Layer::Direct, &self.fm))
    }

    /// `𝔱(n, m, k, r, β)` at level `p`, in the normal form of `k_A^{⊗(m+k+1)}`.
    pub fn t_factor(&self, n: u32, m: u32, k: u32, r: u32, beta: &MonotoneMap) -> Result<Polynomial> {
        if n < m + k || r > k || beta.target() != k {
            return Err(Error::InvalidParameters(format!("t-factor with n={n}, m={m}, k={k}, r={r}, beta={beta}")));
        }
        let cod = model(ModelId::KaTensor { n: m + k + 1, m: 1 })?;
        let p = beta.source() as usize;
        let var = |s: u32| -> Result<Polynomial> {
            if s == 0 && self.fm.t_reading == TReading::DomainAlias {
                return Ok(Polynomial::pi_pow(n + 2));
            }
            cod.normalize_var(p, &VarId::t(s, 1))
        };
        let mut acc = var(s_alpha(beta, r as i64 - 1)?)?;
        for i in r..k {
            acc = acc * (Polynomial::pi() - var(s_alpha(beta, i as i64)?)?);
        }
        let e = n - m - k + u32::from(self.fm.has(Mutation::TExponent));
        Ok(acc * Polynomial::pi_pow(e))
    }

    /// `ℋ^(k)_m` or `𝒦^(k)_m`.
    pub fn master(&self, kind: Master, q: &HomotopyParams) -> Result<Morphism> {
        self.memo(format!("{kind:?}.{q}"), || match kind {
            Master::H => self.build_master_h(q),
            Master::K => {
                let zeta = self.zeta_direct(q.m + q.k + 1)?;
                Ok(compose(&zeta, &self.master(Master::H, q)?)?.renamed(format!("K({q})")))
            }
        })
    }

    fn build_master_h(&self, q: &HomotopyParams) -> Result<Morphism> {
        let HomotopyParams { n, m, k, .. } = *q;
        let dom = Arc::new(master_domain(n + 2, m, k)?);
        let cod = model(ModelId::KaTensor { n: m + k + 1, m: 1 })?;
        let mut summands = Vec::new();
        for r in 0..=k {
            summands.push((
                iota_map(m, m + r, &q.d)?,
                self.h_small(m + r + 1)?,
                self.composite(Skip::F, m + r + 1, m + k + 1, &q.d)?,
            ));
        }
        let this = Homotopies { fm: self.fm, memo: Mutex::default() };
        Ok(Morphism::new(format!("H({q})"), dom, cod, move |p, x| {
            let (alpha, beta) = match x.labels.as_slice() {
                [a, b] => (a, b),
                _ => return Err(Error::UnknownGenerator(format!("{x} lacks two labels"))),
            };
            let mut total = Polynomial::zero();
            for (r, (iota, h, f)) in summands.iter().enumerate() {
                let y = VarId::t(x.bar, 1).with_labels(vec![compose_maps(iota, alpha)?]);
                let term = f.eval(p, &h.image(p, &y)?)?;
                total = total + term * this.t_factor(n, m, k, r as u32, beta)?;
            }
            Ok(total)
        }))
    }

    /// The composite a vertex `l ∈ [k]` of a master homotopy must restrict to, built from
    /// independently constructed pieces.
    pub fn master_vertex_expected(&self, kind: Master, q: &HomotopyParams, l: u32) -> Result<Morphism> {
        let HomotopyParams { n, m, k, .. } = *q;
        let base = Arc::new(ModelId::KaM(n + 2).build()?.simplex_tensor(m));
        let push = label_pushforward(&base, &iota_map(m, m + l, &q.d)?)?;
        let mid = Arc::new(ModelId::KaM(m + l + 1).build()?.simplex_tensor(m + l));
        let can = can_between(n + 2, m + l + 1, push.codomain().clone(), mid, &self.fm);
        let small = match kind {
            Master::H => self.h_small(m + l + 1)?,
            Master::K => self.k_small(m + l + 1)?,
        };
        let tail = self.composite(kind.skip(), m + l + 1, m + k + 1, &q.d)?;
        compose_all(&[push, can, small, tail])
    }

    pub fn master_vertex_check(&self, kind: Master, q: &HomotopyParams, l: u32, p_max: usize) -> Certificate {
        let run = || -> Result<Certificate> {
            let got = vertex_restriction(&self.master(kind, q)?, l)?;
            Ok(morphisms_equal(&got, &self.master_vertex_expected(kind, q, l)?, p_max))
        };
        run().unwrap_or_else(|e| Err(Counterexample::from_error(0, format!("vertex {l}"), &e)))
    }

    /// The `(k-1)` versus `k` compatibility square.
    pub fn master_diagram_check(&self, kind: Master, q: &HomotopyParams, p_max: usize) -> Certificate {
        let run = || -> Result<Certificate> {
            let HomotopyParams { n, m, k, .. } = *q;
            let prev = q.previous()?;
            let top_dom = Arc::new(master_domain(n + 2, m, k - 1)?);
            let can = can_between(n + 2, n + 1, top_dom.clone(), Arc::new(master_domain(n + 1, m, k - 1)?), &self.fm);
            let last = self.composite(kind.skip(), m + k, m + k + 1, &q.d)?;
            let top = compose_all(&[can, self.master(kind, &prev)?, last])?;
            let push = label_pushforward(&top_dom, &delta(k, k)?)?;
            let left = compose(&self.master(kind, q)?, &push)?;
            Ok(morphisms_equal(&top, &left, p_max))
        };
        run().unwrap_or_else(|e| Err(Counterexample::from_error(0, "diagram", &e)))
    }

    /// `vertex_restriction(h̃, i) = ρ^i ∘ can(n,1)^{⊗n}`.
    pub fn h_tilde_vertex_check(&self, n: u32, i: u32, p_max: usize) -> Certificate {
        let run = || -> Result<Certificate> {
            let got = vertex_restriction(&self.h_tilde(n)?, i)?;
            let want = compose(&rho_action(n, i, ModelId::KaTensor { n, m: 1 })?, &can_map(n, 1, n, &self.fm)?)?;
            Ok(morphisms_equal(&got, &want, p_max))
        };
        run().unwrap_or_else(|e| Err(Counterexample::from_error(0, format!("vertex {i}"), &e)))
    }

    /// `vertex_restriction(𝔥, i) = incl_{i+1} ∘ can(n,1)`.
    pub fn h_small_vertex_check(&self, n: u32, i: u32, p_max: usize) -> Certificate {
        let run = || -> Result<Certificate> {
            let got = vertex_restriction(&self.h_small(n)?, i)?;
            let want = compose(&factor_inclusion(n, i + 1, 1)?, &can_map(n, 1, 1, &self.fm)?)?;
            Ok(morphisms_equal(&got, &want, p_max))
        };
        run().unwrap_or_else(|e| Err(Counterexample::from_error(0, format!("vertex {i}"), &e)))
    }

    /// The `h̃` formula at `j = 0` is `π^n` and at `j = p+1` is `0`, for every label and factor.
    pub fn telescoping_check(&self, n: u32, p_max: usize) -> Certificate {
        let h = self.h_tilde(n).map_err(|e| Counterexample::from_error(0, "h~", &e))?;
        for p in 0..=p_max {
            for labels in h.domain().label_tuples(p) {
                for a in 1..=n {
                    for (j, want) in [(0, Polynomial::pi_pow(n)), (p as u32 + 1, Polynomial::zero())] {
                        let x = VarId::t(j, a).with_labels(labels.clone());
                        let got = h
                            .raw(p, &x)
                            .and_then(|y| h.codomain().normalize(p, &y))
                            .map_err(|e| Counterexample::from_error(p, format!("j={j}"), &e))?;
                        if got != want {
                            return Err(Counterexample::new(p, format!("j={j}"), x.to_string(), got, want));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn h_tilde_formula(cod: &Presentation, rho: &Perm, n: u32, p: usize, x: &VarId, fm: &Formulas) -> Result<Polynomial> {
    let alpha = x
        .labels
        .first()
        .ok_or_else(|| Error::UnknownGenerator(format!("{x} lacks its simplex label")))?;
    let a = x.factor;
    let s = |i: u32| s_alpha(alpha, i as i64);
    let t = |bar: u32, factor: u32| cod.normalize_var(p, &VarId::t(bar, factor));
    let rho_pow = |e: i64| rho.pow(e).apply(a);
    let mut total = Polynomial::zero();
    let last = match fm.h_reading {
        HReading::Uniform if fm.has(Mutation::DroppedSummand) => n - 1,
        HReading::Uniform => n,
        HReading::SplitClosing => n - 1,
    };
    for r in 1..=last {
        let mut term = t(x.bar, rho_pow(r as i64 - 1))?;
        for i in 0..r.saturating_sub(1) {
            term = term * t(s(i)?, rho_pow(i as i64))?;
        }
        let closing = Polynomial::pi() - t(s(r - 1)?, rho_pow(r as i64 - 1))?;
        term = if r < n {
            term * closing * Polynomial::pi_pow(n - r - 1)
        } else {
            let unit = closing
                .div_pi()
                .ok_or_else(|| Error::NotDivisibleByPi(format!("closing factor {closing} at r = n for {x}")))?;
            term * unit
        };
        total = total + term;
    }
    if fm.h_reading == HReading::SplitClosing {
        let mut term = t(x.bar, rho_pow(n as i64))?;
        for i in 0..n - 1 {
            term = term * t(s(i)?, rho_pow(i as i64 - 1))?;
        }
        total = total + term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: &[u32], n: u32) -> MonotoneMap {
        MonotoneMap::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn h_tilde_expansion_n2() {
        let hs = Homotopies::new(Formulas::default());
        let h = hs.h_tilde(2).unwrap();
        let x = VarId::t(1, 1).with_labels(vec![lab(&[0, 1], 1)]);
        let t = |j, a| Polynomial::var(VarId::t(j, a));
        let want = t(1, 1) * (Polynomial::pi() - t(1, 1)) + t(1, 2) * t(1, 1);
        assert_eq!(h.image(1, &x).unwrap(), want);
        let v = VarId::t(1, 1).with_labels(vec![lab(&[1, 1], 1)]);
        assert_eq!(h.image(1, &v).unwrap(), Polynomial::pi() * t(1, 2));
    }

    #[test]
    fn n1_is_identity_like() {
        let hs = Homotopies::new(Formulas::default());
        let h = hs.h_tilde(1).unwrap();
        let x = VarId::t(2, 1).with_labels(vec![lab(&[0, 0, 0], 0)]);
        assert_eq!(h.image(2, &x).unwrap(), Polynomial::var(VarId::t(2, 1)));
    }

    #[test]
    fn t_factor_vertex_values() {
        let hs = Homotopies::new(Formulas::default());
        let (n, m, k) = (3, 0, 2);
        for l in 0..=k {
            let beta = MonotoneMap::constant(1, k, l).unwrap();
            for r in 0..=k {
                let want = if r == l { Polynomial::pi_pow(n - m - l + 1) } else { Polynomial::zero() };
                assert_eq!(hs.t_factor(n, m, k, r, &beta).unwrap(), want, "l={l} r={r}");
            }
        }
        assert!(hs.t_factor(1, 1, 1, 0, &MonotoneMap::constant(1, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn iota_composes_cofaces() {
        let d = DVector::new(1, vec![1, 0]).unwrap();
        assert_eq!(iota_map(0, 2, &d).unwrap(), lab(&[1], 2));
        assert_eq!(iota_map(0, 2, &DVector::new(1, vec![0, 0]).unwrap()).unwrap(), lab(&[2], 2));
        assert_eq!(iota_map(1, 1, &d).unwrap(), MonotoneMap::identity(1));
    }
}
