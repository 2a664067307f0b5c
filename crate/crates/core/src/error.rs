use thiserror::Error;

/// Errors raised by the descent algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("cannot parse Coxeter type {0:?}")]
    ParseType(String),
    #[error("{operation} exceeds the enumeration gate ({size} > {bound})")]
    GateExceeded { operation: String, size: u128, bound: u128 },
    #[error("elements belong to different Coxeter data")]
    MixedData,
    #[error("basis mismatch: expected {expected} basis, got {found}")]
    BasisMismatch { expected: char, found: char },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
