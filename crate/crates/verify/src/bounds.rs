//! Size bounds of a run and the d-vector selection policy.

use crate::VerifyError;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use simpforge_models::DVector;
use std::fmt;
use std::str::FromStr;

/// How the d-vectors of the master homotopies are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DPolicy {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

impl DPolicy {
    /// Vectors `(d_start, …, d_{start+len-1})` selected by the policy, in enumeration order.
    pub fn select(&self, start: u32, len: u32) -> Vec<(DVector, bool)> {
        let all = DVector::all(start, len);
        match *self {
            DPolicy::Exhaustive => all.into_iter().map(|d| (d, true)).collect(),
            DPolicy::Sample { count, .. } if count >= all.len() => all.into_iter().map(|d| (d, true)).collect(),
            DPolicy::Sample { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(start) << 32) ^ u64::from(len));
                let mut keep = vec![false; all.len()];
                for i in sample(&mut rng, all.len(), count) {
                    keep[i] = true;
                }
                all.into_iter().zip(keep).collect()
            }
        }
    }
}

impl fmt::Display for DPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DPolicy::Exhaustive => write!(f, "exhaustive"),
            DPolicy::Sample { count, seed } => write!(f, "sample:{count}:{seed}"),
        }
    }
}

impl FromStr for DPolicy {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let bad = || VerifyError::Config(format!("bad d-policy `{s}`: expected exhaustive or sample:COUNT:SEED"));
        if s == "exhaustive" {
            return Ok(DPolicy::Exhaustive);
        }
        match s.split(':').collect::<Vec<_>>().as_slice() {
            ["sample", count, seed] => {
                let count: usize = count.parse().map_err(|_| bad())?;
                let seed: u64 = seed.parse().map_err(|_| bad())?;
                if count == 0 {
                    return Err(VerifyError::Config("sample count must be at least 1".into()));
                }
                Ok(DPolicy::Sample { count, seed })
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for DPolicy {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DPolicy {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Upper bounds on simplicial level, tensor width, `m + k` and homological weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub p_max: usize,
    pub n_max: u32,
    pub mk_max: u32,
    pub w_max: u32,
    pub d_policy: DPolicy,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { p_max: 4, n_max: 4, mk_max: 3, w_max: 8, d_policy: DPolicy::Exhaustive }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.p_max < 2 {
            return Err(VerifyError::Config(format!("p_max = {} but faces need two levels", self.p_max)));
        }
        if self.n_max == 0 {
            return Err(VerifyError::Config("n_max must be positive".into()));
        }
        Ok(())
    }

    /// The componentwise maximum with the defaults: the range over which checks are registered.
    pub fn universe(&self) -> Bounds {
        let d = Bounds::default();
        Bounds {
            p_max: self.p_max.max(d.p_max),
            n_max: self.n_max.max(d.n_max),
            mk_max: self.mk_max.max(d.mk_max),
            w_max: self.w_max.max(d.w_max),
            d_policy: self.d_policy,
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p_max={} n_max={} mk_max={} w_max={} d_policy={}",
            self.p_max, self.n_max, self.mk_max, self.w_max, self.d_policy
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policy_text() {
        for s in ["exhaustive", "sample:3:17"] {
            assert_eq!(s.parse::<DPolicy>().unwrap().to_string(), s);
        }
        assert!("sample:0:1".parse::<DPolicy>().is_err());
        assert!("sample:2".parse::<DPolicy>().is_err());
        assert!("all".parse::<DPolicy>().is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_sized() {
        let p = DPolicy::Sample { count: 3, seed: 9 };
        let a = p.select(1, 3);
        assert_eq!(a, p.select(1, 3));
        assert_eq!(a.len(), 24);
        assert_eq!(a.iter().filter(|(_, k)| *k).count(), 3);
        assert!(DPolicy::Sample { count: 100, seed: 0 }.select(1, 2).iter().all(|(_, k)| *k));
    }

    #[test]
    fn validation() {
        assert!(Bounds::default().validate().is_ok());
        assert!(Bounds { p_max: 1, ..Bounds::default() }.validate().is_err());
    }
}
