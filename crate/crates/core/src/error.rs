//! Error type shared by every module in the crate.

use thiserror::Error;

/// Unified error for all toolkit operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two series with incompatible center, variable, or precision.
    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    /// A Mobius map was evaluated at its pole.
    #[error("pole of {map} at {point}")]
    Pole { map: String, point: String },

    /// A coefficient table or series is too shallow for the requested
    /// tail bound or order.
    #[error("insufficient depth: need at least {required_max_r}, have {available}")]
    Truncation {
        required_max_r: usize,
        available: usize,
    },

    /// The requested precision cannot be reached by this algorithm.
    #[error("accuracy loss: ~{achieved} of {requested} digits reachable")]
    AccuracyLoss { requested: u32, achieved: u32 },

    /// Malformed text in a cache or report file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A runtime-checked invariant failed (e.g. a negative Pustylnikov coefficient).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Unknown series, suite, or closed-form identifier.
    #[error("unknown id: {0}")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
