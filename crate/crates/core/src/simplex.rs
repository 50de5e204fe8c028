//! The simplex category: monotone maps `[p] -> [n]`, cofaces and codegeneracies,
//! their relations, enumeration of `Δ^n_p`, and the counting functions `m_α`, `𝒮_α`.

use crate::check::{Certificate, Counterexample};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// An order-preserving map `[p] -> [n]` stored by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct MonotoneMap {
    values: Vec<u32>,
    target: u32,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    values: Vec<u32>,
    target: u32,
}

impl TryFrom<MapRepr> for MonotoneMap {
    type Error = Error;
    fn try_from(r: MapRepr) -> Result<Self> {
        MonotoneMap::new(r.values, r.target)
    }
}

impl From<MonotoneMap> for MapRepr {
    fn from(m: MonotoneMap) -> Self {
        MapRepr { values: m.values, target: m.target }
    }
}

impl MonotoneMap {
    pub fn new(values: Vec<u32>, target: u32) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidMap("empty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMap(format!("{values:?} is not weakly increasing")));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::InvalidMap(format!("{values:?} leaves [{target}]")));
        }
        Ok(MonotoneMap { values, target })
    }

    pub fn identity(n: u32) -> Self {
        MonotoneMap { values: (0..=n).collect(), target: n }
    }

    /// The constant map `[p] -> [n]` with value `v`.
    pub fn constant(p: u32, n: u32, v: u32) -> Result<Self> {
        if v > n {
            return Err(Error::IndexOutOfRange(format!("vertex {v} of [{n}]")));
        }
        Ok(MonotoneMap { values: vec![v; p as usize + 1], target: n })
    }

    pub fn source(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.values[i as usize]
    }

    /// `self ∘ δ^p_i`, i.e. drop the `i`-th value.
    pub fn precompose_delta(&self, i: u32) -> Result<Self> {
        let p = self.source();
        if p == 0 || i > p {
            return Err(Error::IndexOutOfRange(format!("delta({p},{i})")));
        }
        let mut values = self.values.clone();
        values.remove(i as usize);
        Ok(MonotoneMap { values, target: self.target })
    }

    /// `self ∘ σ^p_i`, i.e. repeat the `i`-th value.
    pub fn precompose_sigma(&self, i: u32) -> Result<Self> {
        let p = self.source();
        if i > p {
            return Err(Error::IndexOutOfRange(format!("sigma({p},{i})")));
        }
        let mut values = self.values.clone();
        values.insert(i as usize, self.values[i as usize]);
        Ok(MonotoneMap { values, target: self.target })
    }

    /// `m_α(k) = #α⁻¹(k)`; zero for `k = -1`.
    pub fn fiber_size(&self, k: i64) -> Result<u32> {
        if k == -1 {
            return Ok(0);
        }
        if k < -1 || k > self.target as i64 {
            return Err(Error::IndexOutOfRange(format!("m_alpha at {k} for target [{}]", self.target)));
        }
        Ok(self.values.iter().filter(|&&v| v as i64 == k).count() as u32)
    }

    /// `𝒮_α(k) = #{j : α(j) ≤ k}`; zero for `k = -1`.
    pub fn cumulative(&self, k: i64) -> Result<u32> {
        if k < -1 || k > self.target as i64 {
            return Err(Error::IndexOutOfRange(format!("s_alpha at {k} for target [{}]", self.target)));
        }
        Ok(self.cumulative_unchecked(k))
    }

    pub(crate) fn cumulative_unchecked(&self, k: i64) -> u32 {
        self.values.iter().take_while(|&&v| (v as i64) <= k).count() as u32
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "):[{}]->[{}]", self.source(), self.target)
    }
}

impl FromStr for MonotoneMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg} in monotone map {s:?}") };
        let s = s.trim();
        let (vals, rest) = s
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| bad("expected (v0,...,vp)"))?;
        let values = vals
            .split(',')
            .map(|v| v.trim().parse::<u32>().map_err(|_| bad("bad vertex")))
            .collect::<Result<Vec<_>>>()?;
        let (src, tgt) = rest
            .strip_prefix(":[")
            .and_then(|r| r.split_once("]->["))
            .ok_or_else(|| bad("expected :[p]->[n]"))?;
        let tgt = tgt.strip_suffix(']').ok_or_else(|| bad("expected closing ]"))?;
        let p: u32 = src.trim().parse().map_err(|_| bad("bad source"))?;
        let n: u32 = tgt.trim().parse().map_err(|_| bad("bad target"))?;
        if p as usize + 1 != values.len() {
            return Err(bad("source does not match the number of values"));
        }
        MonotoneMap::new(values, n)
    }
}

/// `δ^n_i : [n-1] -> [n]`, the injection missing `i`.
pub fn delta(n: u32, i: u32) -> Result<MonotoneMap> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("delta({n},{i})")));
    }
    let values = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
    Ok(MonotoneMap { values, target: n })
}

/// `σ^n_i : [n+1] -> [n]`, the surjection hitting `i` twice.
pub fn sigma(n: u32, i: u32) -> Result<MonotoneMap> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("sigma({n},{i})")));
    }
    let values = (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
    Ok(MonotoneMap { values, target: n })
}

/// `g ∘ f`.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.target != g.source() {
        return Err(Error::NotComposable(format!("{g} after {f}")));
    }
    let values = f.values.iter().map(|&v| g.values[v as usize]).collect();
    Ok(MonotoneMap { values, target: g.target })
}

/// All monotone maps `[p] -> [n]` in lexicographic order of their values.
pub fn enumerate_maps(p: u32, n: u32) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; p as usize + 1];
    loop {
        out.push(MonotoneMap { values: cur.clone(), target: n });
        // advance to the next weakly increasing tuple
        let mut pos = cur.len();
        while pos > 0 && cur[pos - 1] == n {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        let v = cur[pos - 1] + 1;
        for x in &mut cur[pos - 1..] {
            *x = v;
        }
    }
}

pub fn s_alpha(alpha: &MonotoneMap, k: i64) -> Result<u32> {
    alpha.cumulative(k)
}

pub fn m_alpha(alpha: &MonotoneMap, k: i64) -> Result<u32> {
    if k < 0 {
        return Err(Error::IndexOutOfRange(format!("m_alpha at {k}")));
    }
    alpha.fiber_size(k)
}

fn relation(n: u32, name: String, lhs: Result<MonotoneMap>, rhs: Result<MonotoneMap>) -> Certificate {
    let show = |r: &Result<MonotoneMap>| match r {
        Ok(m) => m.to_string(),
        Err(e) => e.to_string(),
    };
    match (&lhs, &rhs) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        _ => Err(Counterexample::new(n as usize, name, "-", show(&lhs), show(&rhs))),
    }
}

/// Verify the five cosimplicial relations for every admissible index with target `[n]`, `n ≤ n_max`.
pub fn check_simplex_relations(n_max: u32) -> Certificate {
    for n in 0..=n_max {
        // δ_j ∘ δ_i = δ_i ∘ δ_{j-1}, i < j, maps [n-2] -> [n]
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    relation(
                        n,
                        format!("delta^{n}_{j} o delta^{}_{i} = delta^{n}_{i} o delta^{}_{}", n - 1, n - 1, j - 1),
                        compose(&delta(n, j)?, &delta(n - 1, i)?),
                        compose(&delta(n, i)?, &delta(n - 1, j - 1)?),
                    )?;
                }
            }
        }
        // σ_j ∘ δ_i = δ_i ∘ σ_{j-1}, i < j, maps [n] -> [n]
        if n >= 1 {
            for j in 1..=n {
                for i in 0..j {
                    relation(
                        n,
                        format!("sigma^{n}_{j} o delta^{}_{i} = delta^{n}_{i} o sigma^{}_{}", n + 1, n - 1, j - 1),
                        compose(&sigma(n, j)?, &delta(n + 1, i)?),
                        compose(&delta(n, i)?, &sigma(n - 1, j - 1)?),
                    )?;
                }
            }
        }
        // σ_i ∘ δ_i = id = σ_i ∘ δ_{i+1}
        for i in 0..=n {
            let id = MonotoneMap::identity(n);
            relation(
                n,
                format!("sigma^{n}_{i} o delta^{}_{i} = id", n + 1),
                compose(&sigma(n, i)?, &delta(n + 1, i)?),
                Ok(id.clone()),
            )?;
            relation(
                n,
                format!("sigma^{n}_{i} o delta^{}_{} = id", n + 1, i + 1),
                compose(&sigma(n, i)?, &delta(n + 1, i + 1)?),
                Ok(id),
            )?;
        }
        // σ_j ∘ δ_i = δ_{i-1} ∘ σ_j, i > j+1
        for j in 0..n {
            for i in j + 2..=n + 1 {
                relation(
                    n,
                    format!("sigma^{n}_{j} o delta^{}_{i} = delta^{n}_{} o sigma^{}_{j}", n + 1, i - 1, n - 1),
                    compose(&sigma(n, j)?, &delta(n + 1, i)?),
                    compose(&delta(n, i - 1)?, &sigma(n - 1, j)?),
                )?;
            }
        }
        // σ_j ∘ σ_i = σ_i ∘ σ_{j+1}, i ≤ j, maps [n+2] -> [n]
        for j in 0..=n {
            for i in 0..=j {
                relation(
                    n,
                    format!("sigma^{n}_{j} o sigma^{}_{i} = sigma^{n}_{i} o sigma^{}_{}", n + 1, n + 1, j + 1),
                    compose(&sigma(n, j)?, &sigma(n + 1, i)?),
                    compose(&sigma(n, i)?, &sigma(n + 1, j + 1)?),
                )?;
            }
        }
    }
    Ok(())
}

impl From<Error> for Counterexample {
    fn from(e: Error) -> Self {
        Counterexample::from_error(0, "construction", &e)
    }
}

/// The unique `k` with `𝒮_α(k-1) ≤ i ≤ 𝒮_α(k) - 1`, found by linear scan.
pub fn window_of(alpha: &MonotoneMap, i: u32) -> Option<u32> {
    (0..=alpha.target).find(|&k| {
        alpha.cumulative_unchecked(k as i64 - 1) <= i && i + 1 <= alpha.cumulative_unchecked(k as i64)
    })
}

/// Check the case formulas for `𝒮_{α∘σ_i}` and `𝒮_{α∘δ_i}` against direct computation.
pub fn s_alpha_transformation_check(alpha: &MonotoneMap, i: u32) -> Certificate {
    let p = alpha.source();
    let n = alpha.target;
    let gen = || alpha.to_string();
    if i > p {
        return Err(Counterexample::from_error(
            p as usize,
            format!("i={i}"),
            &Error::IndexOutOfRange(format!("{i} not in [{p}]")),
        ));
    }
    let k = window_of(alpha, i).ok_or_else(|| {
        Counterexample::new(p as usize, format!("window i={i}"), gen(), "no k", "unique k")
    })?;
    let with_sigma = compose(alpha, &sigma(p, i)?)?;
    let with_delta = if p >= 1 { Some(compose(alpha, &delta(p, i)?)?) } else { None };
    for u in 0..=n {
        let base = alpha.cumulative_unchecked(u as i64) as i64;
        let shift = if u < k { 0 } else { 1 };
        let direct = with_sigma.cumulative_unchecked(u as i64) as i64;
        if direct != base + shift {
            return Err(Counterexample::new(
                p as usize,
                format!("sigma i={i} u={u} k={k}"),
                gen(),
                direct,
                base + shift,
            ));
        }
        if let Some(d) = &with_delta {
            let direct = d.cumulative_unchecked(u as i64) as i64;
            if direct != base - shift {
                return Err(Counterexample::new(
                    p as usize,
                    format!("delta i={i} u={u} k={k}"),
                    gen(),
                    direct,
                    base - shift,
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32], n: u32) -> MonotoneMap {
        MonotoneMap::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn coface_and_codegeneracy_values() {
        assert_eq!(delta(2, 1).unwrap(), m(&[0, 2], 2));
        assert_eq!(sigma(1, 0).unwrap(), m(&[0, 0, 1], 1));
        assert_eq!(delta(1, 0).unwrap(), m(&[1], 1));
        assert!(delta(0, 0).is_err());
        assert!(sigma(2, 3).is_err());
    }

    #[test]
    fn composition() {
        assert_eq!(compose(&sigma(1, 0).unwrap(), &delta(2, 0).unwrap()).unwrap(), m(&[0, 1], 1));
        assert_eq!(compose(&delta(2, 2).unwrap(), &delta(1, 0).unwrap()).unwrap(), m(&[1], 2));
        let f = m(&[0, 1, 1], 2);
        assert_eq!(compose(&MonotoneMap::identity(2), &f).unwrap(), f);
        assert!(compose(&delta(2, 0).unwrap(), &f).is_err());
    }

    #[test]
    fn fast_precomposition_matches_compose() {
        for a in enumerate_maps(3, 2) {
            for i in 0..=3 {
                assert_eq!(a.precompose_delta(i).unwrap(), compose(&a, &delta(3, i).unwrap()).unwrap());
                assert_eq!(a.precompose_sigma(i).unwrap(), compose(&a, &sigma(3, i).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_maps(1, 1), vec![m(&[0, 0], 1), m(&[0, 1], 1), m(&[1, 1], 1)]);
        assert_eq!(enumerate_maps(0, 3).len(), 4);
        assert_eq!(enumerate_maps(4, 3).len(), 56);
    }

    #[test]
    fn counting_functions() {
        let a = m(&[0, 0, 1], 1);
        assert_eq!(m_alpha(&a, 0).unwrap(), 2);
        assert_eq!(s_alpha(&a, 1).unwrap(), 3);
        assert_eq!(s_alpha(&a, -1).unwrap(), 0);
        assert!(s_alpha(&a, 2).is_err());
        let c = MonotoneMap::constant(3, 4, 2).unwrap();
        for i in -1..=4 {
            assert_eq!(s_alpha(&c, i).unwrap(), if i <= 1 { 0 } else { 4 });
        }
    }

    #[test]
    fn relations_hold() {
        assert_eq!(check_simplex_relations(4), Ok(()));
    }

    #[test]
    fn transformation_examples() {
        let id = MonotoneMap::identity(2);
        let with_sigma = compose(&id, &sigma(2, 1).unwrap()).unwrap();
        let s: Vec<u32> = (0..=2).map(|u| s_alpha(&with_sigma, u).unwrap()).collect();
        assert_eq!(s, vec![1, 3, 4]);
        assert_eq!(s_alpha_transformation_check(&id, 1), Ok(()));
        assert_eq!(s_alpha_transformation_check(&m(&[0, 1], 1), 0), Ok(()));
        assert_eq!(window_of(&m(&[0, 1], 1), 0), Some(0));
    }

    #[test]
    fn text_round_trip() {
        let a = m(&[0, 0, 2], 3);
        assert_eq!(a.to_string(), "(0,0,2):[2]->[3]");
        assert_eq!(a.to_string().parse::<MonotoneMap>().unwrap(), a);
        assert!("(1,0):[1]->[1]".parse::<MonotoneMap>().is_err());
    }
}
