//! Levelwise presentations of simplicial commutative ℤ[π]-algebras and their morphisms.
//!
//! A presentation is a set of generator chains `x^(j)`, one per `(family, factor)` key.
//! At level `p` the ambient generators are `x^(j)(labels)` for `j ∈ [p+1]` and one simplex label per
//! tensoring `Δ^l ⊗ -`. The top generator `x^(p+1)` is `0`; the bottom generator `x^(0)` is
//! either `π^m` or free. Chains may be identified with each other; every class is represented
//! by its smallest key. Faces and degeneracies act on the bar index by
//! `d_i: j ↦ j (j ≤ i), j-1 (j > i)` and `s_i: j ↦ j (j ≤ i), j+1 (j > i)`, and on each label
//! by precomposition with `δ_i` resp. `σ_i`.

use crate::check::{Certificate, Counterexample};
use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, VarId};
use crate::simplex::{enumerate_maps, MonotoneMap};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::sync::{Arc, Mutex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainKey {
    pub family: Family,
    pub factor: u32,
}

impl ChainKey {
    pub fn t(factor: u32) -> Self {
        ChainKey { family: Family::T, factor }
    }

    pub fn u(factor: u32) -> Self {
        ChainKey { family: Family::U, factor }
    }

    pub fn of(v: &VarId) -> Self {
        ChainKey { family: v.family, factor: v.factor }
    }

    pub fn var(self, bar: u32, labels: Vec<MonotoneMap>) -> VarId {
        VarId { family: self.family, factor: self.factor, bar, labels }
    }
}

impl fmt::Display for ChainKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.factor)
    }
}

/// What the bottom generator `x^(0)` of a chain is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bottom {
    /// `x^(0) = π^m`.
    Power(u32),
    /// `x^(0)` is a free generator.
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub key: ChainKey,
    pub bottom: Bottom,
}

impl Chain {
    pub fn new(key: ChainKey, bottom: Bottom) -> Self {
        Chain { key, bottom }
    }
}

/// The declarative description of a presentation, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub name: String,
    #[serde(default)]
    pub pi_zero: bool,
    pub chains: Vec<Chain>,
    #[serde(default)]
    pub identifications: Vec<(ChainKey, ChainKey)>,
    #[serde(default)]
    pub label_dims: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PresentationSpec", into = "PresentationSpec")]
pub struct Presentation {
    spec: PresentationSpec,
    rep: BTreeMap<ChainKey, ChainKey>,
    bottom: BTreeMap<ChainKey, Bottom>,
}

impl TryFrom<PresentationSpec> for Presentation {
    type Error = Error;

    fn try_from(spec: PresentationSpec) -> Result<Self> {
        let mut bottom = BTreeMap::new();
        for c in &spec.chains {
            if bottom.insert(c.key, c.bottom).is_some() {
                return Err(Error::VarIdCollision(format!("chain {} declared twice in {}", c.key, spec.name)));
            }
        }
        let mut rep: BTreeMap<ChainKey, ChainKey> = bottom.keys().map(|&k| (k, k)).collect();
        fn find(rep: &BTreeMap<ChainKey, ChainKey>, mut k: ChainKey) -> ChainKey {
            while rep[&k] != k {
                k = rep[&k];
            }
            k
        }
        for (a, b) in &spec.identifications {
            for k in [a, b] {
                if !rep.contains_key(k) {
                    return Err(Error::UnknownGenerator(format!("chain {k} in identification of {}", spec.name)));
                }
            }
            let (ra, rb) = (find(&rep, *a), find(&rep, *b));
            if bottom[&ra] != bottom[&rb] {
                return Err(Error::AliasConflict(format!(
                    "identified chains {a} and {b} have different bottoms in {}",
                    spec.name
                )));
            }
            let (lo, hi) = if ra <= rb { (ra, rb) } else { (rb, ra) };
            rep.insert(hi, lo);
        }
        let keys: Vec<_> = rep.keys().copied().collect();
        for k in keys {
            let r = find(&rep, k);
            rep.insert(k, r);
        }
        Ok(Presentation { spec, rep, bottom })
    }
}

impl From<Presentation> for PresentationSpec {
    fn from(p: Presentation) -> Self {
        p.spec
    }
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        chains: Vec<Chain>,
        identifications: Vec<(ChainKey, ChainKey)>,
        label_dims: Vec<u32>,
    ) -> Result<Self> {
        PresentationSpec { name: name.into(), pi_zero: false, chains, identifications, label_dims }.try_into()
    }

    /// The constant simplicial algebra ℤ[π].
    pub fn constant(name: impl Into<String>) -> Self {
        Presentation::new(name, Vec::new(), Vec::new(), Vec::new()).expect("no chains")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Description(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.spec).expect("serializable")
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &PresentationSpec {
        &self.spec
    }

    pub fn is_pi_zero(&self) -> bool {
        self.spec.pi_zero
    }

    pub fn label_dims(&self) -> &[u32] {
        &self.spec.label_dims
    }

    pub fn chain_keys(&self) -> impl Iterator<Item = ChainKey> + '_ {
        self.bottom.keys().copied()
    }

    pub fn representative(&self, k: ChainKey) -> Option<ChainKey> {
        self.rep.get(&k).copied()
    }

    pub fn bottom(&self, k: ChainKey) -> Option<Bottom> {
        self.bottom.get(&k).copied()
    }

    /// Representative chains, in key order.
    pub fn free_chains(&self) -> Vec<ChainKey> {
        self.rep.iter().filter(|(k, r)| k == r).map(|(k, _)| *k).collect()
    }

    /// Largest factor index, used to shift the right operand of a tensor product.
    pub fn width(&self) -> u32 {
        self.bottom.keys().map(|k| k.factor).max().unwrap_or(0)
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut p = self.clone();
        p.spec.name = name.into();
        p
    }

    /// Same chains, bottoms, identification classes, labels and base ring; names are ignored.
    pub fn same_structure(&self, other: &Presentation) -> bool {
        self.spec.pi_zero == other.spec.pi_zero
            && self.spec.label_dims == other.spec.label_dims
            && self.bottom == other.bottom
            && self.rep == other.rep
    }

    /// Add identifications between existing chains.
    pub fn quotient(&self, name: impl Into<String>, extra: &[(ChainKey, ChainKey)]) -> Result<Self> {
        let mut spec = self.spec.clone();
        spec.name = name.into();
        spec.identifications.extend_from_slice(extra);
        spec.try_into()
    }

    /// The specialization `π = 0`.
    pub fn specialize_pi_zero(&self, name: impl Into<String>) -> Self {
        let mut p = self.clone();
        p.spec.name = name.into();
        p.spec.pi_zero = true;
        p
    }

    /// `Δ^l ⊗ self`: one more simplex label, appended last.
    pub fn simplex_tensor(&self, l: u32) -> Self {
        let mut p = self.clone();
        p.spec.label_dims.push(l);
        p.spec.name = format!("D{l}*({})", self.spec.name);
        p
    }

    /// Tensor product over ℤ[π]; the right factor's subscripts shift by the left width.
    pub fn tensor_over_a(&self, other: &Presentation) -> Result<Self> {
        if self.spec.label_dims != other.spec.label_dims || self.spec.pi_zero != other.spec.pi_zero {
            return Err(Error::EndpointMismatch(format!(
                "cannot tensor {} with {}: different labels or base",
                self.name(),
                other.name()
            )));
        }
        let w = self.width();
        let shift = |k: ChainKey| ChainKey { family: k.family, factor: k.factor + w };
        let mut spec = self.spec.clone();
        spec.name = format!("({})*({})", self.name(), other.name());
        for c in &other.spec.chains {
            let key = shift(c.key);
            if self.bottom.contains_key(&key) {
                return Err(Error::VarIdCollision(format!("chain {key} after re-indexing")));
            }
            spec.chains.push(Chain::new(key, c.bottom));
        }
        spec.identifications.extend(other.spec.identifications.iter().map(|(a, b)| (shift(*a), shift(*b))));
        spec.try_into()
    }

    fn check_var(&self, p: usize, v: &VarId) -> Result<ChainKey> {
        let key = ChainKey::of(v);
        let rep = self
            .rep
            .get(&key)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(format!("{v} in {}", self.name())))?;
        if v.bar as usize > p + 1 {
            return Err(Error::UnknownGenerator(format!("{v} at level {p} of {}", self.name())));
        }
        if v.labels.len() != self.spec.label_dims.len()
            || v.labels
                .iter()
                .zip(&self.spec.label_dims)
                .any(|(l, &d)| l.source() as usize != p || l.target() != d)
        {
            return Err(Error::UnknownGenerator(format!("{v} has wrong labels for level {p} of {}", self.name())));
        }
        Ok(rep)
    }

    /// Whether an ambient generator is free (not aliased) at level `p`.
    pub fn is_free(&self, p: usize, v: &VarId) -> Result<bool> {
        let rep = self.check_var(p, v)?;
        let key = ChainKey::of(v);
        Ok(rep == key
            && (v.bar as usize) <= p
            && (v.bar > 0 || self.bottom[&key] == Bottom::Free))
    }

    /// Normal form of an ambient generator at level `p`.
    pub fn normalize_var(&self, p: usize, v: &VarId) -> Result<Polynomial> {
        let rep = self.check_var(p, v)?;
        if v.bar as usize == p + 1 {
            return Ok(Polynomial::zero());
        }
        if v.bar == 0 {
            if let Bottom::Power(m) = self.bottom[&rep] {
                return Ok(if self.spec.pi_zero && m > 0 { Polynomial::zero() } else { Polynomial::pi_pow(m) });
            }
        }
        Ok(Polynomial::var(rep.var(v.bar, v.labels.clone())))
    }

    /// Normal form of a polynomial in ambient generators at level `p`.
    pub fn normalize(&self, p: usize, x: &Polynomial) -> Result<Polynomial> {
        let y = x.try_substitute(|v| self.normalize_var(p, v).map(Some))?;
        Ok(if self.spec.pi_zero { y.specialize_pi(&BigInt::zero()) } else { y })
    }

    fn face_var(i: usize, v: &VarId) -> Result<VarId> {
        let bar = if v.bar as usize <= i { v.bar } else { v.bar - 1 };
        let labels = v.labels.iter().map(|l| l.precompose_delta(i as u32)).collect::<Result<_>>()?;
        Ok(VarId { bar, labels, ..v.clone() })
    }

    fn degeneracy_var(i: usize, v: &VarId) -> Result<VarId> {
        let bar = if v.bar as usize <= i { v.bar } else { v.bar + 1 };
        let labels = v.labels.iter().map(|l| l.precompose_sigma(i as u32)).collect::<Result<_>>()?;
        Ok(VarId { bar, labels, ..v.clone() })
    }

    /// `d_i` from level `p` to level `p-1`, applied to a polynomial in level-`p` generators.
    pub fn face(&self, p: usize, i: usize, x: &Polynomial) -> Result<Polynomial> {
        if p == 0 || i > p {
            return Err(Error::IndexOutOfRange(format!("d_{i} at level {p}")));
        }
        let y = x.try_substitute(|v| {
            self.check_var(p, v)?;
            self.normalize_var(p - 1, &Self::face_var(i, v)?).map(Some)
        })?;
        Ok(if self.spec.pi_zero { y.specialize_pi(&BigInt::zero()) } else { y })
    }

    /// `s_i` from level `p` to level `p+1`.
    pub fn degeneracy(&self, p: usize, i: usize, x: &Polynomial) -> Result<Polynomial> {
        if i > p {
            return Err(Error::IndexOutOfRange(format!("s_{i} at level {p}")));
        }
        let y = x.try_substitute(|v| {
            self.check_var(p, v)?;
            self.normalize_var(p + 1, &Self::degeneracy_var(i, v)?).map(Some)
        })?;
        Ok(if self.spec.pi_zero { y.specialize_pi(&BigInt::zero()) } else { y })
    }

    /// All label tuples at level `p`.
    pub fn label_tuples(&self, p: usize) -> Vec<Vec<MonotoneMap>> {
        let mut out = vec![Vec::new()];
        for &l in &self.spec.label_dims {
            let maps = enumerate_maps(p as u32, l);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    maps.iter().map(move |m| {
                        let mut v = prefix.clone();
                        v.push(m.clone());
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Free generators at level `p`, sorted.
    pub fn free_generators(&self, p: usize) -> Vec<VarId> {
        let mut out = Vec::new();
        let tuples = self.label_tuples(p);
        for key in self.free_chains() {
            let lo = if self.bottom[&key] == Bottom::Free { 0 } else { 1 };
            for j in lo..=p as u32 {
                for labels in &tuples {
                    out.push(key.var(j, labels.clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Every ambient generator at level `p`, sorted.
    pub fn ambient_generators(&self, p: usize) -> Vec<VarId> {
        let tuples = self.label_tuples(p);
        let mut out = Vec::new();
        for key in self.bottom.keys() {
            for j in 0..=p as u32 + 1 {
                for labels in &tuples {
                    out.push(key.var(j, labels.clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Ambient generators that are not free at level `p`.
    pub fn alias_generators(&self, p: usize) -> Vec<VarId> {
        self.ambient_generators(p)
            .into_iter()
            .filter(|v| !self.is_free(p, v).expect("ambient"))
            .collect()
    }

    /// Check the simplicial identities on every free generator, and that faces and
    /// degeneracies are compatible with the aliases, for all levels up to `p_max`.
    pub fn check_presentation(&self, p_max: usize) -> Certificate {
        let ce = |p: usize, idx: String, g: &VarId, e: Error| Counterexample::new(p, idx, g.to_string(), e, "-");
        for p in 0..=p_max {
            for a in self.alias_generators(p) {
                let normal = self.normalize_var(p, &a).map_err(|e| ce(p, "alias".into(), &a, e))?;
                if p >= 1 {
                    for i in 0..=p {
                        let direct = Self::face_var(i, &a)
                            .and_then(|v| self.normalize_var(p - 1, &v))
                            .map_err(|e| ce(p, format!("d_{i}"), &a, e))?;
                        let via = self.face(p, i, &normal).map_err(|e| ce(p, format!("d_{i}"), &a, e))?;
                        if direct != via {
                            return Err(Counterexample::new(p, format!("alias d_{i}"), a.to_string(), direct, via));
                        }
                    }
                }
                if p < p_max {
                    for i in 0..=p {
                        let direct = Self::degeneracy_var(i, &a)
                            .and_then(|v| self.normalize_var(p + 1, &v))
                            .map_err(|e| ce(p, format!("s_{i}"), &a, e))?;
                        let via = self.degeneracy(p, i, &normal).map_err(|e| ce(p, format!("s_{i}"), &a, e))?;
                        if direct != via {
                            return Err(Counterexample::new(p, format!("alias s_{i}"), a.to_string(), direct, via));
                        }
                    }
                }
            }
            for g in self.free_generators(p) {
                self.check_identities_on(p, p_max, &g)
                    .map_err(|e| match e {
                        IdentityFailure::Counter(c) => c,
                        IdentityFailure::Error(idx, e) => ce(p, idx, &g, e),
                    })?;
            }
        }
        Ok(())
    }

    fn check_identities_on(&self, q: usize, p_max: usize, g: &VarId) -> std::result::Result<(), IdentityFailure> {
        let x = Polynomial::var(g.clone());
        let err = |idx: &str| {
            let idx = idx.to_string();
            move |e: Error| IdentityFailure::Error(idx.clone(), e)
        };
        let cmp = |idx: String, l: Polynomial, r: Polynomial| {
            if l == r {
                Ok(())
            } else {
                Err(IdentityFailure::Counter(Counterexample::new(q, idx, g.to_string(), l, r)))
            }
        };
        // d_i d_j = d_{j-1} d_i for i < j
        if q >= 2 {
            for j in 0..=q {
                let dj = self.face(q, j, &x).map_err(err("d_j"))?;
                for i in 0..j {
                    let lhs = self.face(q - 1, i, &dj).map_err(err("d_i d_j"))?;
                    let di = self.face(q, i, &x).map_err(err("d_i"))?;
                    let rhs = self.face(q - 1, j - 1, &di).map_err(err("d_{j-1} d_i"))?;
                    cmp(format!("d_{i} d_{j} = d_{} d_{i}", j - 1), lhs, rhs)?;
                }
            }
        }
        if q < p_max {
            for j in 0..=q {
                let sj = self.degeneracy(q, j, &x).map_err(err("s_j"))?;
                for i in 0..=q + 1 {
                    let lhs = self.face(q + 1, i, &sj).map_err(err("d_i s_j"))?;
                    let (rhs, name) = if i < j {
                        let di = self.face(q, i, &x).map_err(err("d_i"))?;
                        (self.degeneracy(q - 1, j - 1, &di).map_err(err("s_{j-1} d_i"))?, format!("d_{i} s_{j} = s_{} d_{i}", j - 1))
                    } else if i == j || i == j + 1 {
                        (x.clone(), format!("d_{i} s_{j} = id"))
                    } else {
                        let di = self.face(q, i - 1, &x).map_err(err("d_{i-1}"))?;
                        (self.degeneracy(q - 1, j, &di).map_err(err("s_j d_{i-1}"))?, format!("d_{i} s_{j} = s_{j} d_{}", i - 1))
                    };
                    cmp(name, lhs, rhs)?;
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i ≤ j
        if q + 2 <= p_max {
            for j in 0..=q {
                let sj = self.degeneracy(q, j, &x).map_err(err("s_j"))?;
                for i in 0..=j {
                    let lhs = self.degeneracy(q + 1, i, &sj).map_err(err("s_i s_j"))?;
                    let si = self.degeneracy(q, i, &x).map_err(err("s_i"))?;
                    let rhs = self.degeneracy(q + 1, j + 1, &si).map_err(err("s_{j+1} s_i"))?;
                    cmp(format!("s_{i} s_{j} = s_{} s_{i}", j + 1), lhs, rhs)?;
                }
            }
        }
        Ok(())
    }

    /// Human-readable expansion of levels `0..=p_max`.
    pub fn dump(&self, p_max: usize) -> Result<String> {
        let mut out = String::new();
        writeln!(out, "presentation {}", self.name()).ok();
        writeln!(out, "description {}", serde_json::to_string(&self.spec).expect("serializable")).ok();
        for p in 0..=p_max {
            let free = self.free_generators(p);
            writeln!(out, "level {p}: {} free generators", free.len()).ok();
            for g in &free {
                writeln!(out, "  gen {g}").ok();
            }
            for a in self.alias_generators(p) {
                writeln!(out, "  alias {a} = {}", self.normalize_var(p, &a)?).ok();
            }
            for g in &free {
                let x = Polynomial::var(g.clone());
                if p >= 1 {
                    for i in 0..=p {
                        writeln!(out, "  d_{i}({g}) = {}", self.face(p, i, &x)?).ok();
                    }
                }
                if p < p_max {
                    for i in 0..=p {
                        writeln!(out, "  s_{i}({g}) = {}", self.degeneracy(p, i, &x)?).ok();
                    }
                }
            }
        }
        Ok(out)
    }
}

enum IdentityFailure {
    Counter(Counterexample),
    Error(String, Error),
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A generator formula: the image of an ambient domain generator at a level, in ambient
/// codomain generators. It is applied to aliases too, which is what the well-definedness
/// certificate checks.
pub type Formula = dyn Fn(usize, &VarId) -> Result<Polynomial> + Send + Sync;

/// Image of each domain chain as a linear combination `Σ c·π^e·y` of codomain chains,
/// applied with the same bar index and labels.
pub type ChainTable = BTreeMap<ChainKey, Vec<(BigInt, u32, ChainKey)>>;

#[derive(Clone)]
pub struct Morphism {
    name: String,
    domain: Arc<Presentation>,
    codomain: Arc<Presentation>,
    formula: Arc<Formula>,
    table: Option<Arc<ChainTable>>,
    cache: Arc<Mutex<HashMap<(usize, VarId), Polynomial>>>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({}: {} -> {})", self.name, self.domain.name(), self.codomain.name())
    }
}

impl Morphism {
    pub fn new(
        name: impl Into<String>,
        domain: Arc<Presentation>,
        codomain: Arc<Presentation>,
        formula: impl Fn(usize, &VarId) -> Result<Polynomial> + Send + Sync + 'static,
    ) -> Self {
        Morphism {
            name: name.into(),
            domain,
            codomain,
            formula: Arc::new(formula),
            table: None,
            cache: Arc::default(),
        }
    }

    /// A morphism sending each chain to a linear combination of chains.
    pub fn chain_linear(
        name: impl Into<String>,
        domain: Arc<Presentation>,
        codomain: Arc<Presentation>,
        table: ChainTable,
    ) -> Self {
        let table = Arc::new(table);
        let t = table.clone();
        let dom_name = domain.name().to_string();
        let mut m = Morphism::new(name, domain, codomain, move |_, x| {
            let key = ChainKey::of(x);
            let row = t
                .get(&key)
                .ok_or_else(|| Error::UnknownGenerator(format!("{x}: chain {key} unmapped from {dom_name}")))?;
            let mut out = Polynomial::zero();
            for (c, e, target) in row {
                let v = Polynomial::var(target.var(x.bar, x.labels.clone()));
                out = out + (v * Polynomial::pi_pow(*e)).scale(c);
            }
            Ok(out)
        });
        m.table = Some(table);
        m
    }

    /// A morphism renaming chains.
    pub fn relabeling(
        name: impl Into<String>,
        domain: Arc<Presentation>,
        codomain: Arc<Presentation>,
        rename: impl Fn(ChainKey) -> ChainKey,
    ) -> Self {
        let table = domain
            .chain_keys()
            .map(|k| (k, vec![(BigInt::one(), 0, rename(k))]))
            .collect();
        Morphism::chain_linear(name, domain, codomain, table)
    }

    pub fn identity(p: Arc<Presentation>) -> Self {
        Morphism::relabeling(format!("id[{}]", p.name()), p.clone(), p, |k| k)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn domain(&self) -> &Arc<Presentation> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Presentation> {
        &self.codomain
    }

    pub fn chain_table(&self) -> Option<&ChainTable> {
        self.table.as_deref()
    }

    /// The formula applied to an ambient domain generator, before normalization.
    pub fn raw(&self, p: usize, x: &VarId) -> Result<Polynomial> {
        (self.formula)(p, x)
    }

    /// The formula applied to an ambient domain generator, in codomain normal form.
    pub fn image(&self, p: usize, x: &VarId) -> Result<Polynomial> {
        let key = (p, x.clone());
        if let Some(v) = self.cache.lock().expect("cache").get(&key) {
            return Ok(v.clone());
        }
        self.domain.normalize_var(p, x)?;
        let v = self.codomain.normalize(p, &(self.formula)(p, x)?)?;
        self.cache.lock().expect("cache").insert(key, v.clone());
        Ok(v)
    }

    /// Ring-homomorphic extension to level-`p` polynomials of the domain.
    pub fn eval(&self, p: usize, x: &Polynomial) -> Result<Polynomial> {
        let normal = self.domain.normalize(p, x)?;
        let y = normal.try_substitute(|v| self.image(p, v).map(Some))?;
        self.codomain.normalize(p, &y)
    }

    /// The formula on every alias agrees with the image forced by the domain relations.
    pub fn check_well_defined(&self, p_max: usize) -> Certificate {
        for p in 0..=p_max {
            for a in self.domain.alias_generators(p) {
                let formula = self.image(p, &a).map_err(|e| Counterexample::from_error(p, "alias formula", &e))?;
                let forced = self
                    .eval(p, &Polynomial::var(a.clone()))
                    .map_err(|e| Counterexample::from_error(p, "alias image", &e))?;
                if formula != forced {
                    return Err(Counterexample::new(p, "alias", a.to_string(), formula, forced));
                }
            }
        }
        Ok(())
    }

    /// Commutation with every face and degeneracy on free generators, levels `≤ p_max`.
    pub fn check_simplicial(&self, p_max: usize) -> Certificate {
        let ce = |p: usize, idx: String, e: Error| Counterexample::from_error(p, idx, &e);
        for p in 0..=p_max {
            for g in self.domain.free_generators(p) {
                let x = Polynomial::var(g.clone());
                let fx = self.image(p, &g).map_err(|e| ce(p, "image".into(), e))?;
                if p >= 1 {
                    for i in 0..=p {
                        let lhs = self
                            .domain
                            .face(p, i, &x)
                            .and_then(|y| self.eval(p - 1, &y))
                            .map_err(|e| ce(p, format!("f d_{i}"), e))?;
                        let rhs = self.codomain.face(p, i, &fx).map_err(|e| ce(p, format!("d_{i} f"), e))?;
                        if lhs != rhs {
                            return Err(Counterexample::new(p, format!("f d_{i} = d_{i} f"), g.to_string(), lhs, rhs));
                        }
                    }
                }
                if p < p_max {
                    for i in 0..=p {
                        let lhs = self
                            .domain
                            .degeneracy(p, i, &x)
                            .and_then(|y| self.eval(p + 1, &y))
                            .map_err(|e| ce(p, format!("f s_{i}"), e))?;
                        let rhs = self.codomain.degeneracy(p, i, &fx).map_err(|e| ce(p, format!("s_{i} f"), e))?;
                        if lhs != rhs {
                            return Err(Counterexample::new(p, format!("f s_{i} = s_{i} f"), g.to_string(), lhs, rhs));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Both mandatory certificates.
    pub fn certify(&self, p_max: usize) -> Certificate {
        self.check_well_defined(p_max)?;
        self.check_simplicial(p_max)
    }
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if !f.codomain.same_structure(&g.domain) {
        return Err(Error::EndpointMismatch(format!(
            "{} ends at {} but {} starts at {}",
            f.name,
            f.codomain.name(),
            g.name,
            g.domain.name()
        )));
    }
    let (f2, g2) = (f.clone(), g.clone());
    Ok(Morphism::new(
        format!("{} o {}", g.name, f.name),
        f.domain.clone(),
        g.codomain.clone(),
        move |p, x| g2.eval(p, &f2.image(p, x)?),
    ))
}

/// Compose a chain `[f_1, f_2, …]` as `… ∘ f_2 ∘ f_1`.
pub fn compose_all(maps: &[Morphism]) -> Result<Morphism> {
    let (first, rest) = maps
        .split_first()
        .ok_or_else(|| Error::InvalidParameters("empty composite".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| compose(g, &acc))
}

/// Exact equality on every free generator of every level `≤ p_max`.
pub fn morphisms_equal(f: &Morphism, g: &Morphism, p_max: usize) -> Certificate {
    if !f.domain.same_structure(&g.domain) || !f.codomain.same_structure(&g.codomain) {
        return Err(Counterexample::new(
            0,
            "endpoints",
            "-",
            format!("{} -> {}", f.domain.name(), f.codomain.name()),
            format!("{} -> {}", g.domain.name(), g.codomain.name()),
        ));
    }
    for p in 0..=p_max {
        for x in f.domain.free_generators(p) {
            let a = f.image(p, &x).map_err(|e| Counterexample::from_error(p, &f.name, &e))?;
            let b = g.image(p, &x).map_err(|e| Counterexample::from_error(p, &g.name, &e))?;
            if a != b {
                return Err(Counterexample::new(p, format!("{} vs {}", f.name, g.name), x.to_string(), a, b));
            }
        }
    }
    Ok(())
}

fn strip_last_label(x: &VarId) -> Result<(VarId, MonotoneMap)> {
    let mut y = x.clone();
    let l = y
        .labels
        .pop()
        .ok_or_else(|| Error::UnknownGenerator(format!("{x} has no simplex label")))?;
    Ok((y, l))
}

fn append_label(x: &Polynomial, label: &MonotoneMap) -> Polynomial {
    x.try_substitute(|v| -> Result<Option<Polynomial>> {
        let mut w = v.clone();
        w.labels.push(label.clone());
        Ok(Some(Polynomial::var(w)))
    })
    .expect("infallible")
}

fn without_last_label(p: &Presentation) -> Result<Presentation> {
    let mut spec = p.spec().clone();
    spec.label_dims
        .pop()
        .ok_or_else(|| Error::InvalidParameters(format!("{} is not simplex-tensored", p.name())))?;
    spec.name = format!("{}|vertex", p.name());
    spec.try_into()
}

/// Restriction of `f: Δ^l ⊗ P -> Q` along the vertex `v` of `Δ^l`.
pub fn vertex_restriction(f: &Morphism, v: u32) -> Result<Morphism> {
    let l = *f
        .domain
        .label_dims()
        .last()
        .ok_or_else(|| Error::InvalidParameters(format!("{} is not simplex-tensored", f.domain.name())))?;
    if v > l {
        return Err(Error::IndexOutOfRange(format!("vertex {v} of Δ^{l}")));
    }
    let dom = Arc::new(without_last_label(&f.domain)?);
    let f2 = f.clone();
    Ok(Morphism::new(format!("{}|v{v}", f.name), dom, f.codomain.clone(), move |p, x| {
        let mut y = x.clone();
        y.labels.push(MonotoneMap::constant(p as u32, l, v)?);
        f2.image(p, &y)
    }))
}

/// `id_{Δ^l} ⊗ f: Δ^l ⊗ P -> Δ^l ⊗ Q`.
pub fn simplex_tensor_morphism(l: u32, f: &Morphism) -> Morphism {
    let dom = Arc::new(f.domain.simplex_tensor(l));
    let cod = Arc::new(f.codomain.simplex_tensor(l));
    let f2 = f.clone();
    Morphism::new(format!("D{l}*{}", f.name), dom, cod, move |p, x| {
        let (y, label) = strip_last_label(x)?;
        Ok(append_label(&f2.image(p, &y)?, &label))
    })
}

/// The map `Δ^a ⊗ P -> Δ^b ⊗ P` induced by `φ: [a] -> [b]` on the last label.
pub fn label_pushforward(p: &Arc<Presentation>, phi: &MonotoneMap) -> Result<Morphism> {
    let a = *p
        .label_dims()
        .last()
        .ok_or_else(|| Error::InvalidParameters(format!("{} is not simplex-tensored", p.name())))?;
    if a != phi.source() {
        return Err(Error::NotComposable(format!("{phi} on labels of dimension {a}")));
    }
    let mut spec = p.spec().clone();
    *spec.label_dims.last_mut().expect("nonempty") = phi.target();
    spec.name = format!("{}>{}", p.name(), phi.target());
    let cod = Arc::new(Presentation::try_from(spec)?);
    let phi = phi.clone();
    Ok(Morphism::new(format!("push{phi}"), p.clone(), cod, move |_, x| {
        let (mut y, label) = strip_last_label(x)?;
        y.labels.push(crate::simplex::compose(&phi, &label)?);
        Ok(Polynomial::var(y))
    }))
}

/// The map of quotients induced by a map of covers: lift, apply, push down.
pub fn induced_on_quotients(
    name: impl Into<String>,
    cover: &Morphism,
    domain: Arc<Presentation>,
    codomain: Arc<Presentation>,
) -> Result<Morphism> {
    let keys = |p: &Presentation| p.chain_keys().collect::<Vec<_>>();
    if keys(&domain) != keys(&cover.domain) || keys(&codomain) != keys(&cover.codomain) {
        return Err(Error::EndpointMismatch(format!("{} does not cover the given quotients", cover.name)));
    }
    let c = cover.clone();
    let mut m = Morphism::new(name, domain, codomain, move |p, x| c.raw(p, x));
    m.table = cover.table.clone();
    Ok(m)
}

/// Inverse of a chain-linear morphism that is a bijection on free chains.
pub fn invert_relabeling(f: &Morphism, name: impl Into<String>) -> Result<Morphism> {
    let not_inv = || Error::InvalidParameters(format!("{} is not a bijection of free chains", f.name));
    let mut inv: BTreeMap<ChainKey, ChainKey> = BTreeMap::new();
    for d in f.domain.free_chains() {
        let img = f.image(1, &d.var(1, probe_labels(&f.domain)))?;
        let mut terms = img.terms();
        let (m, c) = terms.next().ok_or_else(not_inv)?;
        if terms.next().is_some() || !c.is_one() || m.pi_exponent() != 0 || m.var_exponents().len() != 1 {
            return Err(not_inv());
        }
        let (v, e) = &m.var_exponents()[0];
        if *e != 1 || inv.insert(ChainKey::of(v), d).is_some() {
            return Err(not_inv());
        }
    }
    if inv.len() != f.codomain.free_chains().len() {
        return Err(not_inv());
    }
    let mut table = ChainTable::new();
    for k in f.codomain.chain_keys() {
        let r = f.codomain.representative(k).expect("own chain");
        table.insert(k, vec![(BigInt::one(), 0, inv[&r])]);
    }
    Ok(Morphism::chain_linear(name, f.codomain.clone(), f.domain.clone(), table))
}

fn probe_labels(p: &Presentation) -> Vec<MonotoneMap> {
    p.label_dims()
        .iter()
        .map(|&l| MonotoneMap::constant(1, l, 0).expect("vertex 0"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ka(m: u32) -> Arc<Presentation> {
        Arc::new(Presentation::new(format!("kA({m})"), vec![Chain::new(ChainKey::t(1), Bottom::Power(m))], vec![], vec![]).unwrap())
    }

    fn can(hi: u32, lo: u32) -> Morphism {
        let mut t = ChainTable::new();
        t.insert(ChainKey::t(1), vec![(BigInt::one(), hi - lo, ChainKey::t(1))]);
        Morphism::chain_linear(format!("can({hi},{lo})"), ka(hi), ka(lo), t)
    }

    #[test]
    fn levels_and_aliases() {
        let p = ka(2);
        assert_eq!(p.free_generators(2), vec![VarId::t(1, 1), VarId::t(2, 1)]);
        assert_eq!(p.normalize_var(1, &VarId::t(0, 1)).unwrap(), Polynomial::pi_pow(2));
        assert!(p.normalize_var(1, &VarId::t(2, 1)).unwrap().is_zero());
        assert!(p.normalize_var(1, &VarId::t(3, 1)).is_err());
        assert_eq!(p.check_presentation(4), Ok(()));
        assert_eq!(Presentation::constant("A").check_presentation(4), Ok(()));
    }

    #[test]
    fn can_map_examples() {
        let c = can(2, 1);
        assert_eq!(c.eval(1, &Polynomial::var(VarId::t(1, 1))).unwrap(), Polynomial::pi() * Polynomial::var(VarId::t(1, 1)));
        assert_eq!(c.image(1, &VarId::t(0, 1)).unwrap(), Polynomial::pi_pow(2));
        assert_eq!(c.certify(4), Ok(()));
        let composite = compose(&can(2, 1), &can(3, 2)).unwrap();
        assert_eq!(morphisms_equal(&composite, &can(3, 1), 4), Ok(()));
    }

    #[test]
    fn corrupted_map_is_caught() {
        let bad = Morphism::new("bad", ka(2), ka(1), |_, x| Ok(Polynomial::pi() * Polynomial::var(x.clone()) + Polynomial::one()));
        assert!(bad.check_simplicial(4).is_err());
        assert!(bad.check_well_defined(4).is_err());
    }

    #[test]
    fn simplex_tensor_faces() {
        let p = ka(2).simplex_tensor(1);
        assert_eq!(p.free_generators(1).len(), 3);
        let alpha = MonotoneMap::new(vec![0, 1], 1).unwrap();
        let x = Polynomial::var(VarId::t(1, 1).with_labels(vec![alpha]));
        assert_eq!(p.face(1, 0, &x).unwrap(), Polynomial::pi_pow(2));
        assert_eq!(p.check_presentation(4), Ok(()));
    }

    #[test]
    fn json_round_trip() {
        let p = ka(3).simplex_tensor(2);
        let q = Presentation::from_json(&p.to_json()).unwrap();
        assert!(p.same_structure(&q));
        assert!(Presentation::from_json("{\"name\":\"x\",\"chains\":[],\"identifications\":[[{\"family\":\"T\",\"factor\":1},{\"family\":\"T\",\"factor\":2}]]}").is_err());
    }
}
