use thiserror::Error;

/// Errors raised by the wave-operator pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero wavevector")]
    ZeroWaveVector,

    #[error("wave speed must be positive, got {0}")]
    NonPositiveSpeed(f64),

    #[error("singular matrix (|det| = {det_abs:.3e})")]
    SingularMatrix { det_abs: f64 },

    #[error("spectral decomposition failed: {reason} (residual {residual:.3e})")]
    DecompositionFailure { reason: &'static str, residual: f64 },

    #[error("series did not converge within {max_terms} terms (last term {last_term_norm:.3e})")]
    NoConvergence {
        max_terms: usize,
        last_term_norm: f64,
    },

    #[error("degenerate denominator in closed-form eigenvalue")]
    DegenerateDenominator,

    #[error("invalid scenario: {0}")]
    InvalidScenario(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
