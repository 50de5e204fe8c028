use thiserror::Error;

/// Errors raised when an object cannot be built or an operation is ill-posed.
///
/// Failing identities are not errors: they are reported as [`crate::check::Counterexample`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid monotone map: {0}")]
    InvalidMap(String),
    #[error("maps do not compose: {0}")]
    NotComposable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("alias conflict: {0}")]
    AliasConflict(String),
    #[error("variable collision: {0}")]
    VarIdCollision(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("division by pi is not exact: {0}")]
    NotDivisibleByPi(String),
    #[error("weight grading violated: {0}")]
    Weight(String),
    #[error("outside the certified range: {0}")]
    Range(String),
    #[error("bad presentation description: {0}")]
    Description(String),
}

pub type Result<T> = std::result::Result<T, Error>;
