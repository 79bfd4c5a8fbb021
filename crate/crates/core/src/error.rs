//! Error type shared across the crate.
//!
//! Everything here is exact arithmetic, so there are only a few ways to go
//! wrong: combining series of different truncation orders, inverting a series
//! whose constant term is not a unit, handing an operation a value outside its
//! domain, or hitting a violation of an identity the code relies on (which
//! means a bug, never bad input).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two series with different truncation orders were combined.
    /// Arithmetic never re-truncates implicitly.
    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Inversion requires the constant term to be 1 or -1.
    #[error("series is not invertible: constant term must be 1 or -1")]
    NonUnitConstant,

    /// An argument was outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A relation that is a theorem failed numerically; indicates a bug in
    /// this crate, not a property of the input.
    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
