//! Permutation tables for `ρ_n` and the index map `ϱ_c`.

use simpforge_core::{Error, Result};

/// A permutation of `⟨n⟩ = {1, …, n}` stored as an explicit table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    table: Vec<u32>,
}

impl Perm {
    pub fn identity(n: u32) -> Self {
        Perm { table: (1..=n).collect() }
    }

    pub fn from_table(table: Vec<u32>) -> Result<Self> {
        let n = table.len() as u32;
        let mut seen = vec![false; table.len()];
        for &v in &table {
            if v == 0 || v > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidParameters(format!("{table:?} is not a permutation")));
            }
        }
        Ok(Perm { table })
    }

    /// `ρ_n = (1 ↦ 2 ↦ … ↦ n ↦ 1)`.
    pub fn rho(n: u32) -> Self {
        Perm { table: (1..=n).map(|a| if a == n { 1 } else { a + 1 }).collect() }
    }

    pub fn size(&self) -> u32 {
        self.table.len() as u32
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.table[a as usize - 1]
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &Perm) -> Perm {
        Perm { table: other.table.iter().map(|&a| self.apply(a)).collect() }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Perm::identity(self.size()), |acc, _| base.then_after(&acc))
    }

    pub fn inverse(&self) -> Perm {
        let mut table = vec![0; self.table.len()];
        for (i, &v) in self.table.iter().enumerate() {
            table[v as usize - 1] = i as u32 + 1;
        }
        Perm { table }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn order(&self) -> u32 {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.then_after(&p);
            k += 1;
        }
        k
    }
}

/// `ϱ_c: [c] → ⟨c⟩`, `i ↦ i + 1` for `i ≤ c - 1` and `c ↦ 1`, as a table indexed by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarRho {
    table: Vec<u32>,
}

impl VarRho {
    pub fn new(c: u32) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidParameters("ϱ_c needs c ≥ 1".into()));
        }
        Ok(VarRho { table: (0..=c).map(|i| if i == c { 1 } else { i + 1 }).collect() })
    }

    pub fn apply(&self, r: u32) -> Result<u32> {
        self.table
            .get(r as usize)
            .copied()
            .ok_or_else(|| Error::IndexOutOfRange(format!("r = {r} outside [{}]", self.table.len() - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_values() {
        let v = VarRho::new(3).unwrap();
        assert_eq!(v.apply(0).unwrap(), 1);
        assert_eq!(v.apply(2).unwrap(), 3);
        assert_eq!(v.apply(3).unwrap(), 1);
        assert!(v.apply(4).is_err());
        let r = Perm::rho(4);
        assert_eq!(r.apply(4), 1);
        assert_eq!(r.apply(1), 2);
        assert_eq!(r.order(), 4);
        assert_eq!(r.pow(-1).apply(1), 4);
        assert!(r.pow(4).is_identity());
        assert!(Perm::from_table(vec![1, 1]).is_err());
    }
}
