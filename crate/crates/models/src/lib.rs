//! The built-in cofibrant models, their structural morphisms, and the auxiliary diagrams.

pub mod aux;
pub mod formulas;
pub mod id;
pub mod maps;
pub mod perm;

pub use aux::{aux_diagrams_check, AuxReading, DiagramCheck};
pub use formulas::{Formulas, HReading, Mutation, TReading, ZetaConvention};
pub use id::ModelId;
pub use maps::{DVector, Layer, Skip};
pub use perm::{Perm, VarRho};
