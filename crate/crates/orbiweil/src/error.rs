//! Crate-wide error type.
//!
//! Every failure mode is a data error or a resource cap: the formulas
//! themselves are exact, so `NonIntegral`, `Negative` and `GenusMismatch`
//! always indicate inconsistent input data (or a bug), never rounding.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Division by zero in cyclotomic arithmetic.
    #[error("division by zero in cyclotomic arithmetic")]
    DivisionByZero,

    /// A value expected to be rational has non-zero coefficients on higher
    /// powers of the root of unity.
    #[error("value is not rational: {0}")]
    NotRational(String),

    /// A cyclotomic order beyond the configured cap was requested.
    #[error("cyclotomic order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u64, cap: u64 },

    /// Group closure exceeded the configured size bound.
    #[error("group closure exceeded the size bound of {0} elements")]
    SizeBound(usize),

    /// The character-table lift failed; diagnostic, unreachable for the
    /// supported group corpus.
    #[error("character table lift failed: {0}")]
    LiftFailure(String),

    /// A multiplicity or eigenvalue count failed to be an integer.
    #[error("non-integral value for {context}: {value}")]
    NonIntegral { context: String, value: String },

    /// A multiplicity came out negative.
    #[error("negative multiplicity for {context}: {value}")]
    Negative { context: String, value: String },

    /// The decomposition total does not match the expected genus.
    #[error("genus certificate mismatch: expected {expected}, total dimension {total}")]
    GenusMismatch { expected: u64, total: u64 },

    /// The trivial representation was passed where the formula excludes it.
    #[error("the trivial representation is excluded here")]
    TrivialRep,

    /// An internal enumeration census failed; bug guard.
    #[error("census mismatch: {0}")]
    CensusMismatch(String),

    /// A parameter that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A parameter is outside the supported range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// Structurally inconsistent input data.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
