use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero vector has no orbit")]
    ZeroVector,
    #[error("symmetry precondition violated: {0}")]
    Symmetry(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("deformation of order {order} cannot be checked through order {requested}")]
    OrderOutOfRange { order: usize, requested: usize },
    #[error("invalid series: {0}")]
    Series(String),
    #[error("{0}")]
    Invalid(String),
}
