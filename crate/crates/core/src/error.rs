//! Library error type.

use thiserror::Error;

use crate::algebra::roots::NoConvergence;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polynomial has no nonzero coefficient")]
    EmptyPolynomial,
    #[error("polynomial is not self-inversive")]
    NotSelfInversive,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("polynomial is not trim (it has a nonzero constant or darga term)")]
    NotTrim,
    #[error("polynomial is not full (constant or darga term vanishes)")]
    NotFull,
    #[error("darga mismatch: expected {expected}, found {found}")]
    DargaMismatch { expected: usize, found: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("not supported: {0}")]
    NotSupported(String),
    #[error("numeric oracle failed: {0}")]
    OracleFailure(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<NoConvergence> for Error {
    fn from(e: NoConvergence) -> Self {
        Error::OracleFailure(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
