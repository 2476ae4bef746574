//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by parameter validation and the numeric pipeline.
#[derive(Debug, Error)]
pub enum WtqError {
    /// A physical-domain precondition was violated (negative current,
    /// non-positive capacitance, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameter validation failed; each entry names the offending field.
    #[error("invalid parameters: {}", .0.join("; "))]
    Validation(Vec<String>),

    /// The capacitive network cannot be reduced (singular combination).
    #[error("network reduction failed: {0}")]
    Reduction(String),

    /// Requested basis would exceed the dense-solver guard rail.
    #[error("configuration error: {0}")]
    Config(String),

    /// The eigensolver failed to converge.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// A precondition on operation ordering was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The analytic formulas are outside their regime of validity.
    #[error("non-dispersive regime: {0}")]
    NonDispersive(String),

    /// Least-squares fit did not converge; carries the best point found.
    #[error("fit did not converge after {iterations} iterations (residual rms {residual_rms_mhz} MHz)")]
    FitDiverged {
        /// Iterations performed before giving up.
        iterations: usize,
        /// Best residual RMS reached, MHz.
        residual_rms_mhz: f64,
    },

    /// Dataset is too small or too narrow to identify the free parameters.
    #[error("dataset not identifiable: {0}")]
    NotIdentifiable(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, WtqError>;
