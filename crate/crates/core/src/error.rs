use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("direction {k} out of range for rank {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("rank {0} outside supported range 1..=12")]
    Rank(usize),
    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),
    #[error("inexact division")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exponent extraction on the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid tree path: {0}")]
    InvalidPath(String),
    #[error("direction {0} is neither a source nor a sink")]
    NotSourceSink(usize),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
