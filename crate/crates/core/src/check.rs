//! Outcome of a finite exact certification.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A witness that an identity fails: where it was evaluated and both sides in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub level: usize,
    pub index: String,
    pub generator: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(
        level: usize,
        index: impl Into<String>,
        generator: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        Counterexample {
            level,
            index: index.into(),
            generator: generator.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A counterexample that records a construction error instead of an identity.
    pub fn from_error(level: usize, index: impl Into<String>, err: &crate::Error) -> Self {
        Counterexample::new(level, index, "-", err.to_string(), "-")
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {} [{}] on {}: {} != {}",
            self.level, self.index, self.generator, self.lhs, self.rhs
        )
    }
}

/// `Ok(())` when every instance of an identity holds within the checked range.
pub type Certificate = std::result::Result<(), Counterexample>;

/// Compare two values and produce a counterexample when they differ.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    level: usize,
    index: impl FnOnce() -> String,
    generator: impl FnOnce() -> String,
    lhs: &T,
    rhs: &T,
) -> Certificate {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Counterexample::new(level, index(), generator(), lhs, rhs))
    }
}
