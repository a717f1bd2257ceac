//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the arithmetic and certification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exponent or precision bookkeeping left the supported range.
    /// Signaled explicitly instead of wrapping or saturating.
    #[error("capacity exceeded: {0}")]
    Capacity(&'static str),

    /// An operation was applied outside its mathematical domain
    /// (division by zero, square root of a negative, tangent where the
    /// cosine enclosure contains zero, violated preconditions).
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// A caller-supplied parameter was rejected before any computation.
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
