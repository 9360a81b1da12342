//! Error type shared by every module in the crate.

use thiserror::Error;

/// All failure modes surfaced by the library.
///
/// Construction-time validation (shapes, normalization) and run-time
/// contract violations (missing configuration, bad data) are reported
/// through this enum rather than panics; optimizer blow-ups are reported
/// as [`Error::Divergence`] so callers can record them as an outcome.
#[derive(Debug, Error)]
pub enum Error {
    /// Array shapes disagree with the declared dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A probability vector failed validation (negative entries or bad sum).
    #[error("invalid distribution: {0}")]
    Distribution(String),

    /// A value is outside its documented range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A required piece of configuration is missing or inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// A state has no feature row in the feature table.
    #[error("feature error: {0}")]
    Feature(String),

    /// The dataset cannot support the requested computation.
    #[error("data error: {0}")]
    Data(String),

    /// A policy violates a structural constraint required by the operation.
    #[error("constraint violation: {0}")]
    Constraint(String),

    /// A requested brute-force search is too large to enumerate.
    #[error("refusing enumeration: {0}")]
    TooLarge(String),

    /// Optimization produced a non-finite quantity at the given step.
    #[error("optimization diverged at step {step}: {detail}")]
    Divergence { step: usize, detail: String },

    /// An internal cross-check between two independent computations failed.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    /// Serialized text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Filesystem failure while reading or writing artifacts.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
