// Index loops over fixed 3x3 kernels read better than iterator chains here.
#![allow(clippy::needless_range_loop)]

//! Plane-wave electromagnetics in stationary, non-dispersive, anisotropic
//! media with loss or gain.
//!
//! For a fixed wavevector the field dynamics reduce to a 3x3 complex wave
//! operator whose Jordan decomposition yields closed-form propagators, a
//! hermiticity classification (quasi-Hermitian, pseudo-Hermitian-only, or
//! neither), and the catalogue of time-harmonic modes. Preset media with
//! closed-form solutions and independent numerical oracles (defining
//! series, RK4, quadrature) support end-to-end validation.

pub mod error;
pub mod hermiticity;
pub mod material;
pub mod matrix;
pub mod oracle;
pub mod propagate;
pub mod scenarios;
pub mod spectral;
pub mod tolerances;
pub mod trig;
pub mod wave;

pub use error::{Error, Result};
pub use hermiticity::{
    check_pseudo_hermitian, classify, example1_conditions, gauge_decompose, pseudo_by_gauge,
    Example1Params, GaugeParts, HermiticityClass, Verdict,
};
pub use material::MaterialPair;
pub use matrix::{ComplexMatrix3, Vec3};
pub use propagate::{
    evolve, gauss_invariants, integral_pair, propagator_pair, time_harmonic_modes, FieldState,
    PlaneWaveMode, PropagatorPair, Sense,
};
pub use scenarios::{
    example1_medium, example1_reference_fields, example2_lambda0, example2_medium,
    example2_special, example3_medium, example3_reference_fields, Example2Params,
    InitialCondition, Preset, ScenarioConfig,
};
pub use spectral::{
    build_wave_operator, jordan_decompose, jordan_decompose_default, principal_sqrt,
    BranchedRoot, JordanCase, SpectralDecomposition, WaveOperator,
};
pub use wave::{build_curl, build_curl_hat, WaveVector};
