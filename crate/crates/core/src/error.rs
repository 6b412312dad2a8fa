//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by configuration validation and numerical routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter failed validation; `param` names the offender.
    #[error("invalid configuration: {param}: {reason}")]
    Config { param: &'static str, reason: String },

    /// Two inputs that must agree in length or shape do not.
    #[error("dimension mismatch: {context} (left {left}, right {right})")]
    Dimension {
        context: &'static str,
        left: usize,
        right: usize,
    },

    /// A bit block had the wrong length for the requested mapping.
    #[error("bit mapping: expected {expected} bits, got {got}")]
    BitCount { expected: usize, got: usize },

    /// A quadrature or special-function evaluation failed its convergence
    /// check. Carries the best available estimate and the error bound it
    /// could not push below the tolerance.
    #[error("numerical routine `{what}` did not converge: estimate {estimate}, error bound {bound}")]
    Numerical {
        what: &'static str,
        estimate: f64,
        bound: f64,
    },

    /// A state the analysis says is unreachable was reached; signals a bug
    /// in the caller-supplied coefficients rather than bad user input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(&'static str),
}

impl Error {
    pub(crate) fn config(param: &'static str, reason: impl Into<String>) -> Self {
        Error::Config {
            param,
            reason: reason.into(),
        }
    }
}
