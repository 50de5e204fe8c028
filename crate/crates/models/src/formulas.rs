//! Switches selecting between readings of ambiguous formulas, and deliberate formula mutations.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A deliberate corruption of one generator formula, used to show the checks are not vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// The `𝔱` factor carries `π^{n-m-k+1}`.
    TExponent,
    /// `ρ` is replaced by `ρ²` inside `h̃`.
    RhoSquared,
    /// The last summand (`r = n`) of `h̃` is dropped.
    DroppedSummand,
    /// `can(m', m)` multiplies by `π^{m'-m+1}`.
    CanExponent,
    /// The skip maps use the threshold `ϱ_c(r) + 1` on `t`.
    SkipThreshold,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::TExponent,
        Mutation::RhoSquared,
        Mutation::DroppedSummand,
        Mutation::CanExponent,
        Mutation::SkipThreshold,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mutation::TExponent => "t-exponent",
            Mutation::RhoSquared => "rho-squared",
            Mutation::DroppedSummand => "dropped-summand",
            Mutation::CanExponent => "can-exponent",
            Mutation::SkipThreshold => "skip-threshold",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mutation `{s}`"))
    }
}

/// Which display of the `h̃` formula is used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HReading {
    /// Sum over `r = 1..n` with the `r = n` factor `(π - 0)·π^{-1} = 1`.
    #[default]
    Uniform,
    /// Sum over `r = 1..n-1` plus a separate closing term with shifted subscripts.
    SplitClosing,
}

/// Where the variables of the `𝔱` factor take their boundary values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TReading {
    /// In the codomain `k_A^{⊗(m+k+1)}`, where `t^(0) = π`.
    #[default]
    Codomain,
    /// In the domain `k_A(n+2)`, where `t^(0) = π^{n+2}`.
    DomainAlias,
}

/// Direction in which `ζ_n` rotates the `u` chains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaConvention {
    /// `u_a ↦ u_{ρ_n(a)}`.
    #[default]
    Forward,
    /// `u_a ↦ u_{ρ_n^{-1}(a)}`.
    Backward,
}

/// Every formula switch in one place; the default is the certified configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Formulas {
    pub mutation: Option<Mutation>,
    pub h_reading: HReading,
    pub t_reading: TReading,
    pub zeta: ZetaConvention,
}

impl Formulas {
    pub fn mutated(m: Mutation) -> Self {
        Formulas { mutation: Some(m), ..Formulas::default() }
    }

    pub fn has(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }
}
