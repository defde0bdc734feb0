//! Crate-wide error type.
//!
//! Budget exhaustion is deliberately *not* an error: operations that can run
//! out of factoring budget return `Option`/status values instead, so callers
//! can distinguish "proved false" from "gave up".

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("integer input must be nonzero")]
    ZeroInteger,

    #[error("modulus {0} is not prime (or exceeds the 64-bit primality range)")]
    NotPrime(u64),

    #[error("mixed moduli: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoeffVanishes(u64),

    #[error("polynomial must be monic")]
    NotMonic,

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("quintinomial parameters require n >= 2")]
    DegreeTooSmall,

    #[error("quintinomial parameters require A·B != 0")]
    ZeroParameter,

    #[error("n = {0} exceeds the supported cap ({1}) for this operation")]
    DegreeCapExceeded(u32, u32),

    #[error("operation requires A ≡ B ≡ 1 (mod 4); got A ≡ {0}, B ≡ {1}")]
    ResidueHypothesis(i64, i64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("serialization failed: {0}")]
    Serialization(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

impl Error {
    /// Shorthand for a named precondition failure.
    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
