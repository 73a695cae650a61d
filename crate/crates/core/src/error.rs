//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (bad dimension, pattern
    /// mismatch, parameter out of range, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation was refused because it would exceed a hard or
    /// configured size limit.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Herald sampling did not produce an accepted event within the
    /// configured attempt budget.
    #[error("no herald accepted after {attempts} attempts")]
    HeraldTimeout { attempts: u64 },

    /// A herald projection left a state with numerically zero norm, so it
    /// cannot be renormalized.
    #[error("degenerate herald projection: squared norm {norm_sqr:.3e} below 1e-12")]
    DegenerateProjection { norm_sqr: f64 },

    /// Structurally invalid input data (malformed JSON, inconsistent
    /// matrix shape, unparseable CSV).
    #[error("format error: {0}")]
    Format(String),

    /// Underlying I/O failure.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for an [`Error::InvalidArgument`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
