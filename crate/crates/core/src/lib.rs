//! Exact computer algebra for levelwise simplicial commutative algebras over ℤ[π],
//! with certification routines for the identities they are expected to satisfy.

pub mod check;
pub mod error;
pub mod poly;
pub mod salg;
pub mod simplex;

pub use check::{Certificate, Counterexample};
pub use error::{Error, Result};
pub use poly::{Family, Monomial, Polynomial, VarId};
pub use simplex::MonotoneMap;
