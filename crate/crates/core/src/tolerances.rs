//! Numeric thresholds shared across the crate.
//!
//! Everything downstream is double precision applied to O(1) dimensionless
//! matrices, so these are stated as relative tolerances and scaled by a
//! Frobenius norm at the point of use.

/// Singularity threshold: a 3x3 matrix is treated as singular when
/// `|det| < TAU_DET * ||M||_F^3`. The cube keeps the test scale invariant.
pub const TAU_DET: f64 = 1e-12;

/// Relative tolerance for hermiticity-classification residuals
/// (metric residual, eigenvalue reality, conjugation closure).
pub const TAU_CLASS: f64 = 1e-8;

/// Tolerance for the closed-form parameter-condition expressions evaluated
/// on float inputs.
pub const TAU_COND: f64 = 1e-10;

/// Below `|lambda * (omega0*t)^2| < TAU_SINC` the cos/sinc block entries are
/// evaluated with short Taylor series instead of the closed form.
pub const TAU_SINC: f64 = 1e-6;

/// Default eigenvalue-equality and rank threshold for the Jordan
/// decomposition of the deflated 2x2 block.
pub const TAU_JORDAN: f64 = 1e-8;

/// Relative size of the null-direction component of the initial data above
/// which time evolution emits a diagnostic warning.
pub const TAU_NULL_WARN: f64 = 1e-10;
