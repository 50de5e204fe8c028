//! Named models and their presentations.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use simpforge_core::salg::{Bottom, Chain, ChainKey, Presentation};
use simpforge_core::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A built-in simplicial algebra.
///
/// Besides the kinds named in the literature this includes the auxiliary quotients of
/// `K_A^{⊗n}` that appear as intermediate objects in the skip-map diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    /// `Bar_{A[t]}(A)`: one chain with free bottom.
    BarAtA,
    /// `k_A(m)`.
    KaM(u32),
    /// `k_A^{⊗n}(m)`.
    KaTensor { n: u32, m: u32 },
    /// `K_A`.
    KA,
    /// `K_A^{⊗n}` over `A`.
    KATensorA(u32),
    /// `K_A^{⊗_{k_A} c}`: `u_a ≡ t_{a+1}`.
    KATensorKa(u32),
    /// `K_A ⊗_A k_A^{⊗e}`: `t_a ≡ u_a` for `a = 2..e+1`.
    KATensorAKae(u32),
    /// `k_A^{⊗c}` as `K_A^{⊗_{k_A} c} / ⟨t_1 - u_c⟩`.
    KaQuotientOfK(u32),
    /// `k_A^{⊗c}` as `K_A^{⊗c} / ⟨t_a - u_a⟩`.
    KaDiagOfK(u32),
    /// `k_A^{⊗e} ⊗_A K_A`: `t_a ≡ u_a` for `a = 1..e`.
    KaeTensorAKA(u32),
    /// `K_A^{⊗n} / ⟨t_1 - u_n⟩`.
    KATensorAWrap(u32),
    /// `K_A^{⊗n} / ⟨t_n - u_n⟩`.
    KATensorATop(u32),
    /// `K_A^{⊗c+1} / ⟨t_1 - u_{c+1}, u_a - t_a : a = 2..c⟩`.
    PhiSource(u32),
    /// `K_A^{⊗c+1} / ⟨t_{c+1} - u_{c+1}, u_a - t_a : a = 1..c-1⟩`.
    UpsilonSource(u32),
    /// `K_A^{⊗c+1} / ⟨t_{r+2} - u_{r+1}⟩`.
    FSkipQuotient { c: u32, r: u32 },
    /// `K_A^{⊗c+1} / ⟨t_{r+2} - u_{r+2}⟩`.
    GSkipQuotient { c: u32, r: u32 },
    /// `k_A(m)` with `π = 0`.
    KaPiZero(u32),
}

impl ModelId {
    /// The kinds certified by the model suite, within the usual bounds.
    pub fn catalogue() -> Vec<ModelId> {
        let mut out = vec![ModelId::BarAtA, ModelId::KA];
        out.extend((1..=4).map(ModelId::KaM));
        for n in 1..=3 {
            for m in 1..=4 {
                out.push(ModelId::KaTensor { n, m });
            }
        }
        out.extend((1..=3).map(ModelId::KATensorA));
        out.extend((1..=4).map(ModelId::KATensorKa));
        out.extend((0..=3).map(ModelId::KATensorAKae));
        out.extend((1..=4).map(ModelId::KaQuotientOfK));
        out.extend((1..=4).map(ModelId::KaDiagOfK));
        out.extend((0..=3).map(ModelId::KaeTensorAKA));
        out.extend((1..=4).map(ModelId::KATensorAWrap));
        out.extend((1..=4).map(ModelId::KATensorATop));
        out.extend((1..=3).map(ModelId::PhiSource));
        out.extend((1..=3).map(ModelId::UpsilonSource));
        for c in 1..=3 {
            for r in 0..c {
                out.push(ModelId::FSkipQuotient { c, r });
                out.push(ModelId::GSkipQuotient { c, r });
            }
        }
        out.push(ModelId::KaPiZero(1));
        out
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameters(format!("{self}: {what}")));
        match *self {
            ModelId::KaM(m) | ModelId::KaPiZero(m) if m == 0 => bad("m ≥ 1"),
            ModelId::KaTensor { n, m } if n == 0 || m == 0 => bad("n ≥ 1 and m ≥ 1"),
            ModelId::KATensorA(n) | ModelId::KATensorAWrap(n) | ModelId::KATensorATop(n) if n == 0 => bad("n ≥ 1"),
            ModelId::KATensorKa(c)
            | ModelId::KaQuotientOfK(c)
            | ModelId::KaDiagOfK(c)
            | ModelId::PhiSource(c)
            | ModelId::UpsilonSource(c)
                if c == 0 =>
            {
                bad("c ≥ 1")
            }
            ModelId::FSkipQuotient { c, r } | ModelId::GSkipQuotient { c, r } if c == 0 || r >= c => {
                bad("c ≥ 1 and r ≤ c - 1")
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Presentation> {
        self.validate()?;
        let name = self.to_string();
        let t = ChainKey::t;
        let u = ChainKey::u;
        let p = match *self {
            ModelId::BarAtA => Presentation::new(name, vec![Chain::new(t(1), Bottom::Free)], vec![], vec![])?,
            ModelId::KaM(m) => ka(m, &name)?,
            ModelId::KaPiZero(m) => ka(m, &name)?.specialize_pi_zero(name),
            ModelId::KaTensor { n, m } => {
                let one = ka(m, "kA")?;
                let mut acc = one.clone();
                for _ in 1..n {
                    acc = acc.tensor_over_a(&one)?;
                }
                acc.renamed(name)
            }
            ModelId::KA => k_big(&name)?,
            ModelId::KATensorA(n) => k_tensor(n)?.renamed(name),
            ModelId::KATensorKa(c) => {
                let ids = (1..c).map(|a| (u(a), t(a + 1))).collect::<Vec<_>>();
                k_tensor(c)?.quotient(name, &ids)?
            }
            ModelId::KATensorAKae(e) => {
                let ids = (2..=e + 1).map(|a| (t(a), u(a))).collect::<Vec<_>>();
                k_tensor(e + 1)?.quotient(name, &ids)?
            }
            ModelId::KaQuotientOfK(c) => {
                let mut ids = (1..c).map(|a| (u(a), t(a + 1))).collect::<Vec<_>>();
                ids.push((t(1), u(c)));
                k_tensor(c)?.quotient(name, &ids)?
            }
            ModelId::KaDiagOfK(c) => {
                let ids = (1..=c).map(|a| (t(a), u(a))).collect::<Vec<_>>();
                k_tensor(c)?.quotient(name, &ids)?
            }
            ModelId::KaeTensorAKA(e) => {
                let ids = (1..=e).map(|a| (t(a), u(a))).collect::<Vec<_>>();
                k_tensor(e + 1)?.quotient(name, &ids)?
            }
            ModelId::KATensorAWrap(n) => k_tensor(n)?.quotient(name, &[(t(1), u(n))])?,
            ModelId::KATensorATop(n) => k_tensor(n)?.quotient(name, &[(t(n), u(n))])?,
            ModelId::PhiSource(c) => {
                let mut ids = vec![(t(1), u(c + 1))];
                ids.extend((2..=c).map(|a| (u(a), t(a))));
                k_tensor(c + 1)?.quotient(name, &ids)?
            }
            ModelId::UpsilonSource(c) => {
                let mut ids = vec![(t(c + 1), u(c + 1))];
                ids.extend((1..c).map(|a| (u(a), t(a))));
                k_tensor(c + 1)?.quotient(name, &ids)?
            }
            ModelId::FSkipQuotient { c, r } => k_tensor(c + 1)?.quotient(name, &[(t(r + 2), u(r + 1))])?,
            ModelId::GSkipQuotient { c, r } => k_tensor(c + 1)?.quotient(name, &[(t(r + 2), u(r + 2))])?,
        };
        Ok(p)
    }

    /// Number of tensor factors.
    pub fn factors(&self) -> u32 {
        match *self {
            ModelId::BarAtA | ModelId::KaM(_) | ModelId::KA | ModelId::KaPiZero(_) => 1,
            ModelId::KaTensor { n, .. } | ModelId::KATensorA(n) | ModelId::KATensorAWrap(n) | ModelId::KATensorATop(n) => n,
            ModelId::KATensorKa(c) | ModelId::KaQuotientOfK(c) | ModelId::KaDiagOfK(c) => c,
            ModelId::KATensorAKae(e) | ModelId::KaeTensorAKA(e) => e + 1,
            ModelId::PhiSource(c) | ModelId::UpsilonSource(c) => c + 1,
            ModelId::FSkipQuotient { c, .. } | ModelId::GSkipQuotient { c, .. } => c + 1,
        }
    }

    /// Weight of each non-π generator that makes the faces weight-homogeneous.
    pub fn t_weight(&self) -> u32 {
        match *self {
            ModelId::KaM(m) | ModelId::KaTensor { m, .. } => m,
            _ => 1,
        }
    }
}

fn ka(m: u32, name: &str) -> Result<Presentation> {
    Presentation::new(name, vec![Chain::new(ChainKey::t(1), Bottom::Power(m))], vec![], vec![])
}

fn k_big(name: &str) -> Result<Presentation> {
    Presentation::new(
        name,
        vec![Chain::new(ChainKey::t(1), Bottom::Power(1)), Chain::new(ChainKey::u(1), Bottom::Power(1))],
        vec![],
        vec![],
    )
}

fn k_tensor(n: u32) -> Result<Presentation> {
    let one = k_big("K_A")?;
    let mut acc = one.clone();
    for _ in 1..n {
        acc = acc.tensor_over_a(&one)?;
    }
    Ok(acc.renamed(format!("K_A_tensor_A({n})")))
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelId::BarAtA => write!(f, "BarAtA"),
            ModelId::KaM(m) => write!(f, "kA({m})"),
            ModelId::KaTensor { n, m } => write!(f, "kA_tensor({n},{m})"),
            ModelId::KA => write!(f, "K_A"),
            ModelId::KATensorA(n) => write!(f, "K_A_tensor_A({n})"),
            ModelId::KATensorKa(c) => write!(f, "K_A_tensor_kA({c})"),
            ModelId::KATensorAKae(e) => write!(f, "K_A_tensor_A_kAe({e})"),
            ModelId::KaQuotientOfK(c) => write!(f, "kA_quotient_of_K({c})"),
            ModelId::KaDiagOfK(c) => write!(f, "kA_diag_of_K({c})"),
            ModelId::KaeTensorAKA(e) => write!(f, "kAe_tensor_A_K_A({e})"),
            ModelId::KATensorAWrap(n) => write!(f, "K_A_tensor_A_wrap({n})"),
            ModelId::KATensorATop(n) => write!(f, "K_A_tensor_A_top({n})"),
            ModelId::PhiSource(c) => write!(f, "phi_source({c})"),
            ModelId::UpsilonSource(c) => write!(f, "upsilon_source({c})"),
            ModelId::FSkipQuotient { c, r } => write!(f, "f_skip_quotient({c},{r})"),
            ModelId::GSkipQuotient { c, r } => write!(f, "g_skip_quotient({c},{r})"),
            ModelId::KaPiZero(m) => write!(f, "kA_pi_zero({m})"),
        }
    }
}

impl FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidParameters(format!("unknown model id `{s}`"));
        let s = s.trim();
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => {
                let args = s[i + 1..s.len() - 1]
                    .split(',')
                    .map(|a| a.trim().parse::<u32>().map_err(|_| err()))
                    .collect::<Result<Vec<_>>>()?;
                (&s[..i], args)
            }
            None => (s, Vec::new()),
            _ => return Err(err()),
        };
        let id = match (head, args.as_slice()) {
            ("BarAtA", []) => ModelId::BarAtA,
            ("K_A", []) => ModelId::KA,
            ("kA", [m]) => ModelId::KaM(*m),
            ("kA_tensor", [n, m]) => ModelId::KaTensor { n: *n, m: *m },
            ("K_A_tensor_A", [n]) => ModelId::KATensorA(*n),
            ("K_A_tensor_kA", [c]) => ModelId::KATensorKa(*c),
            ("K_A_tensor_A_kAe", [e]) => ModelId::KATensorAKae(*e),
            ("kA_quotient_of_K", [c]) => ModelId::KaQuotientOfK(*c),
            ("kA_diag_of_K", [c]) => ModelId::KaDiagOfK(*c),
            ("kAe_tensor_A_K_A", [e]) => ModelId::KaeTensorAKA(*e),
            ("K_A_tensor_A_wrap", [n]) => ModelId::KATensorAWrap(*n),
            ("K_A_tensor_A_top", [n]) => ModelId::KATensorATop(*n),
            ("phi_source", [c]) => ModelId::PhiSource(*c),
            ("upsilon_source", [c]) => ModelId::UpsilonSource(*c),
            ("f_skip_quotient", [c, r]) => ModelId::FSkipQuotient { c: *c, r: *r },
            ("g_skip_quotient", [c, r]) => ModelId::GSkipQuotient { c: *c, r: *r },
            ("kA_pi_zero", [m]) => ModelId::KaPiZero(*m),
            _ => return Err(err()),
        };
        id.validate()?;
        Ok(id)
    }
}

impl Serialize for ModelId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ModelId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use simpforge_core::VarId;

    #[test]
    fn ids_round_trip() {
        for id in ModelId::catalogue() {
            assert_eq!(id.to_string().parse::<ModelId>().unwrap(), id);
        }
        assert!("kA(0)".parse::<ModelId>().is_err());
        assert!("nope".parse::<ModelId>().is_err());
    }

    #[test]
    fn level_one_of_k_a() {
        let p = ModelId::KA.build().unwrap();
        assert_eq!(p.free_generators(1), vec![VarId::t(1, 1), VarId::u(1, 1)]);
        assert_eq!(p.free_generators(0), vec![]);
    }

    #[test]
    fn middle_identification() {
        let p = ModelId::KATensorKa(2).build().unwrap();
        assert_eq!(p.representative(ChainKey::u(1)), Some(ChainKey::t(2)));
        assert_eq!(p.free_chains(), vec![ChainKey::t(1), ChainKey::t(2), ChainKey::u(2)]);
        let q = ModelId::KaQuotientOfK(3).build().unwrap();
        assert_eq!(q.free_chains(), vec![ChainKey::t(1), ChainKey::t(2), ChainKey::t(3)]);
    }
}
