//! Weight-graded chain complexes of presentations and their exact integer homology.
//!
//! The unnormalized complex `Σ (−1)^i d_i` of the underlying simplicial abelian group splits
//! into finite free pieces once every generator is given a weight compatible with the faces.

pub mod complex;
pub mod homology;
pub mod snf;

pub use complex::{assemble, GradedComplex, Weights};
pub use homology::{homology, homology_all, induced_map_on_homology, pi0, AbelianGroup, InducedMap, Pi0};
pub use snf::{elementary_divisors, smith, DenseMatrix, SparseMatrix};

use simpforge_core::{Counterexample, Error};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoldKanError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("face d_{face} of {generator} at level {level} is not homogeneous: {image}")]
    Inhomogeneous { level: usize, face: usize, generator: String, image: String },
    #[error("{monomial} is not a basis monomial of weight {w} at level {level}")]
    NotInBasis { level: usize, w: u32, monomial: String },
    #[error("boundary does not square to zero: {0}")]
    DSquared(Counterexample),
    #[error("H_{degree} needs level {} but the complex stops at {p_max}", degree + 1)]
    Range { degree: usize, p_max: usize },
    #[error("the chain is not a cycle")]
    NotACycle,
    #[error("pi_0 is not presented over Z[pi]: {0}")]
    NotPiOnly(String),
}
