//! Preset media and their closed-form reference solutions.
//!
//! Each preset regenerates its tensors from scalar parameters at call time,
//! and the reference fields below are evaluated from explicit formulas so
//! that regression tests compare two genuinely independent routes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermiticity::Example1Params;
use crate::material::MaterialPair;
use crate::matrix::{ComplexMatrix3, Vec3};
use crate::propagate::FieldState;
use crate::tolerances::TAU_DET;
use crate::wave::WaveVector;

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Uniaxial gyrotropic medium: transverse blocks
/// `[[e1 + i ge, i a], [-i a, e1 + i ge]]` with axis entries `e3`, `m3`.
pub fn example1_medium(p: &Example1Params) -> Result<MaterialPair> {
    let z = c64(0.0, 0.0);
    let e_diag = c64(p.eps1, p.gamma_eps);
    let m_diag = c64(p.mu1, p.gamma_mu);
    let eps = ComplexMatrix3::from_rows([
        [e_diag, c64(0.0, p.alpha), z],
        [c64(0.0, -p.alpha), e_diag, z],
        [z, z, c64(p.eps3, 0.0)],
    ]);
    let mu = ComplexMatrix3::from_rows([
        [m_diag, c64(0.0, p.beta), z],
        [c64(0.0, -p.beta), m_diag, z],
        [z, z, c64(p.mu3, 0.0)],
    ]);
    MaterialPair::new(eps, mu)
}

/// Closed-form field envelopes for axial propagation in the uniaxial
/// medium, starting from a linearly polarized electric amplitude at angle
/// `phi` and zero magnetic amplitude.
///
/// Returns `(n_E, n_B)` with `E = amp * n_E` and `B = i * amp / c * n_B`.
/// `n_E` superposes the two circular polarizations with their own
/// frequencies `sqrt(lambda_-)`, `sqrt(lambda_+)`; `n_B` is the exact time
/// integral of the curl of that field, which for a conjugate eigenvalue
/// pair keeps both envelopes real (phase conservation).
pub fn example1_reference_fields(
    p: &Example1Params,
    phi: f64,
    k3: f64,
    c_light: f64,
    t: f64,
) -> (Vec3, Vec3) {
    let (lm, lp) = p.lambda_pm();
    let omega0 = c_light * k3.abs();
    let theta = omega0 * t;
    let rm = crate::spectral::principal_sqrt(lm).sqrt_lambda;
    let rp = crate::spectral::principal_sqrt(lp).sqrt_lambda;
    let cm = (rm * theta).cos();
    let cp = (rp * theta).cos();
    let sm = (rm * theta).sin() / rm;
    let sp = (rp * theta).sin() / rp;
    let em = c64(0.0, -phi).exp();
    let ep = c64(0.0, phi).exp();
    let i = Complex64::i();
    let half = c64(0.5, 0.0);
    let n_e = [
        half * (em * cm + ep * cp),
        half * i * (em * cm - ep * cp),
        c64(0.0, 0.0),
    ];
    let sign = if k3 >= 0.0 { 1.0 } else { -1.0 };
    let n_b = [
        half * (-i) * (em * sm - ep * sp) * sign,
        half * (em * sm + ep * sp) * sign,
        c64(0.0, 0.0),
    ];
    (n_e, n_b)
}

/// Assembled reference state for the uniaxial preset.
pub fn example1_reference_state(
    p: &Example1Params,
    amp: Complex64,
    phi: f64,
    k: &WaveVector,
    t: f64,
) -> FieldState {
    let (n_e, n_b) = example1_reference_fields(p, phi, k.k3(), k.speed(), t);
    let i_over_c = c64(0.0, 1.0 / k.speed());
    FieldState {
        e: [amp * n_e[0], amp * n_e[1], amp * n_e[2]],
        b: [
            amp * i_over_c * n_b[0],
            amp * i_over_c * n_b[1],
            amp * i_over_c * n_b[2],
        ],
        t,
        k: *k,
    }
}

/// Entries of the shared complex symmetric tensor
/// `[[a, g, u], [g, b, h], [u, h, c]]` used for both material tensors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Example2Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub g: Complex64,
    pub h: Complex64,
    pub u: Complex64,
}

impl Example2Params {
    pub fn lambda_matrix(&self) -> ComplexMatrix3 {
        ComplexMatrix3::from_rows([
            [self.a, self.g, self.u],
            [self.g, self.b, self.h],
            [self.u, self.h, self.c],
        ])
    }
}

/// Medium with identical complex symmetric permittivity and permeability.
pub fn example2_medium(p: &Example2Params) -> Result<MaterialPair> {
    let lam = p.lambda_matrix();
    MaterialPair::new(lam, lam)
}

/// The constrained one-parameter family `a = b = (1 + u^2)/c`, `g = u^2/c`,
/// `h = u`, for which the nonzero eigenvalue collapses to `c^2`.
pub fn example2_special(c: Complex64, u: Complex64) -> Result<Example2Params> {
    if c.norm() < 1e-12 {
        return Err(Error::DegenerateDenominator);
    }
    let one = c64(1.0, 0.0);
    let ab = (one + u * u) / c;
    Ok(Example2Params {
        a: ab,
        b: ab,
        c,
        g: u * u / c,
        h: u,
        u,
    })
}

/// Closed-form doubly degenerate nonzero eigenvalue of the symmetric-medium
/// operator: `k·(Lambda k) / (|k|^2 det Lambda)`.
pub fn example2_lambda0(p: &Example2Params, k: &WaveVector) -> Result<Complex64> {
    let [k1, k2, k3] = k.components();
    let num = p.a * (k1 * k1)
        + p.b * (k2 * k2)
        + p.c * (k3 * k3)
        + (p.g * (k1 * k2) + p.h * (k2 * k3) + p.u * (k1 * k3)) * 2.0;
    let det = p.a * p.b * p.c + p.g * p.h * p.u * 2.0
        - (p.a * p.h * p.h + p.b * p.u * p.u + p.c * p.g * p.g);
    let scale = p.lambda_matrix().fro_norm();
    if det.norm() < TAU_DET * scale * scale * scale {
        return Err(Error::DegenerateDenominator);
    }
    Ok(num / (det * k.norm() * k.norm()))
}

/// Medium whose wave operator has a single 2x2 Jordan block with eigenvalue
/// `f` and lone eigenvector `(1, i, 0)` for axial propagation.
///
/// The *inverse* permittivity carries the characteristic layout
/// `[[f - i g, g, 0], [g, f + i g, 0], [0, 0, 1]]`; the stored tensor is
/// its inverse and the permeability is trivial. Both `f` and `g` must be
/// nonzero (`g = 0` collapses the block to a scalar).
pub fn example3_medium(f: Complex64, g: Complex64) -> Result<MaterialPair> {
    if f.norm() == 0.0 {
        return Err(Error::InvalidScenario("example3 requires f != 0"));
    }
    if g.norm() == 0.0 {
        return Err(Error::InvalidScenario("example3 requires g != 0"));
    }
    let z = c64(0.0, 0.0);
    let i = Complex64::i();
    let eps_inv = ComplexMatrix3::from_rows([
        [f - i * g, g, z],
        [g, f + i * g, z],
        [z, z, c64(1.0, 0.0)],
    ]);
    MaterialPair::from_inverses(eps_inv, ComplexMatrix3::identity())
}

/// Closed-form fields for the defective medium starting from the
/// counter-rotating circular amplitude `amp * (1, -i, 0)` with zero
/// magnetic amplitude.
///
/// The electric amplitude mixes the bounded carrier with a secular
/// `omega0 t` term; the magnetic amplitude is its exact curl integral.
pub fn example3_reference_fields(
    amp: Complex64,
    f: Complex64,
    g: Complex64,
    k3: f64,
    c_light: f64,
    t: f64,
) -> (Vec3, Vec3) {
    let omega0 = c_light * k3.abs();
    let theta = omega0 * t;
    let i = Complex64::i();
    let root = crate::spectral::principal_sqrt(f).sqrt_lambda;
    let cterm = (root * theta).cos();
    let s = (root * theta).sin() / root;
    // Chain contribution: d/dlambda of sin(sqrt(l) theta)/sqrt(l).
    let d = (cterm * theta - s) / (f * 2.0);
    let e = [
        amp * (cterm + i * g * theta * s),
        amp * (-i * cterm - g * theta * s),
        c64(0.0, 0.0),
    ];
    let sign = if k3 >= 0.0 { 1.0 } else { -1.0 };
    let pre = amp * sign / c_light;
    let b = [
        pre * (-s - i * g * d * 2.0),
        pre * (i * s + g * d * 2.0),
        c64(0.0, 0.0),
    ];
    (e, b)
}

/// Initial amplitudes shared by the presets.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialCondition {
    /// Linear polarization in the transverse plane: `amp (cos phi, sin phi, 0)`.
    Polarized { amplitude: Complex64, angle: f64 },
    /// Counter-rotating circular amplitude `amp (1, -i, 0)`.
    Circular { amplitude: Complex64 },
    Explicit { e0: Vec3, b0: Vec3 },
}

impl InitialCondition {
    pub fn state(&self, k: &WaveVector) -> FieldState {
        let zero = c64(0.0, 0.0);
        match self {
            InitialCondition::Polarized { amplitude, angle } => FieldState::initial(
                [
                    amplitude * angle.cos(),
                    amplitude * angle.sin(),
                    zero,
                ],
                [zero; 3],
                *k,
            ),
            InitialCondition::Circular { amplitude } => FieldState::initial(
                [*amplitude, -Complex64::i() * amplitude, zero],
                [zero; 3],
                *k,
            ),
            InitialCondition::Explicit { e0, b0 } => FieldState::initial(*e0, *b0, *k),
        }
    }
}

/// A preset medium with its wavevector and initial data.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub preset: Preset,
    pub k: WaveVector,
    pub initial: InitialCondition,
}

#[derive(Debug, Clone)]
pub enum Preset {
    Example1(Example1Params),
    Example2(Example2Params),
    Example2Special { c: Complex64, u: Complex64 },
    Example3 { f: Complex64, g: Complex64 },
    Custom {
        eps: ComplexMatrix3,
        mu: ComplexMatrix3,
    },
}

impl ScenarioConfig {
    /// Validates the preset/wavevector combination: the uniaxial and
    /// defective presets are defined for axial propagation only.
    pub fn new(preset: Preset, k: WaveVector, initial: InitialCondition) -> Result<Self> {
        match preset {
            Preset::Example1(_) | Preset::Example3 { .. } if !k.is_axial() => {
                Err(Error::InvalidScenario("this preset requires k1 = k2 = 0"))
            }
            _ => Ok(Self { preset, k, initial }),
        }
    }

    /// Regenerates the material tensors from the stored scalars.
    pub fn medium(&self) -> Result<MaterialPair> {
        match &self.preset {
            Preset::Example1(p) => example1_medium(p),
            Preset::Example2(p) => example2_medium(p),
            Preset::Example2Special { c, u } => example2_medium(&example2_special(*c, *u)?),
            Preset::Example3 { f, g } => example3_medium(*f, *g),
            Preset::Custom { eps, mu } => MaterialPair::new(*eps, *mu),
        }
    }

    pub fn initial_state(&self) -> FieldState {
        self.initial.state(&self.k)
    }
}
