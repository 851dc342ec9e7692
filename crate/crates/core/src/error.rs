use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid scalar literal `{0}`")]
    ParseScalar(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("bilinear form is not symmetric")]
    NotSymmetric,

    #[error("bilinear form has entries outside the real subfield Q(sqrt2)")]
    NotReal,

    #[error("operator is not antisymmetric with respect to the metric")]
    NotAntisymmetric,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid extension data: {0}")]
    InvalidExtension(String),

    #[error("invalid normal derivation set: {0}")]
    InvalidNormalSet(String),

    #[error("unsupported metric: {0}")]
    UnsupportedMetric(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}
