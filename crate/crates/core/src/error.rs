use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("unsupported for this family: {0}")]
    Unsupported(String),
    #[error("element not in the span of the basis: {0}")]
    NotInSpan(String),
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("weight does not define a one-dimensional module: {0}")]
    NotACharacter(String),
    #[error("action is not scalar: {0}")]
    NotScalar(String),
    #[error("modules are over different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("not diagonalizable over Q: {0}")]
    NotDiagonalizable(String),
    #[error("oracle inconclusive: {0}")]
    Inconclusive(String),
    #[error("theorem instance violated: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
