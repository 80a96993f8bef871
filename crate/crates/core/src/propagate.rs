//! Closed-form propagators on Jordan blocks, field evolution, and the
//! time-harmonic mode catalogue.
//!
//! All time dependence is evaluated on the canonical frame and conjugated
//! back once: with `theta = omega0 * t` and `x = lambda * theta^2`, the
//! scalar entries are `cosc(x)` and `theta * sinc(x)`, their
//! lambda-derivatives on a defective block, and the structural zero mode
//! contributes `1` and `theta` (the series value, not zero).

use num_complex::Complex64;

use crate::material::MaterialPair;
use crate::matrix::{vadd, vdot, vnorm, vscale, vsub, ComplexMatrix3, Vec3};
use crate::spectral::{principal_sqrt, JordanCase, SpectralDecomposition};
use crate::tolerances::TAU_NULL_WARN;
use crate::trig::{cosc, dhavc, dsinc, havc, sinc};
use crate::wave::{build_curl_hat, WaveVector};

/// Cosine and scaled-sine propagators at one instant:
/// `E(t) = C E0 + omega0^-1 Sf dE0/dt`.
#[derive(Debug, Clone, Copy)]
pub struct PropagatorPair {
    pub c: ComplexMatrix3,
    pub sf: ComplexMatrix3,
    pub t: f64,
    pub omega0: f64,
}

/// Complex field amplitudes for one wavevector. The magnetic amplitude is
/// stored in natural units (a vacuum plane wave has `|B| = |E|/c`).
#[derive(Debug, Clone)]
pub struct FieldState {
    pub e: Vec3,
    pub b: Vec3,
    pub t: f64,
    pub k: WaveVector,
}

impl FieldState {
    pub fn initial(e: Vec3, b: Vec3, k: WaveVector) -> Self {
        Self { e, b, t: 0.0, k }
    }
}

/// Travel direction of a time-harmonic mode along `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    RightGoing,
    LeftGoing,
}

impl Sense {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sense::RightGoing => "right-going",
            Sense::LeftGoing => "left-going",
        }
    }
}

/// One time-harmonic plane-wave mode `pol * exp(-+ i sqrt(lambda) omega0 t)`.
#[derive(Debug, Clone)]
pub struct PlaneWaveMode {
    pub polarization: Vec3,
    pub lambda: Complex64,
    pub sqrt_lambda: Complex64,
    pub sense: Sense,
    /// Exponential amplitude rate `d log|amp| / dt`.
    pub growth_rate: f64,
}

/// Scalar Jordan-frame entries of `(C, Sf)` at `theta = omega0 t`.
fn frame_entries(case: &JordanCase, theta: f64) -> (ComplexMatrix3, ComplexMatrix3) {
    let th2 = theta * theta;
    let one = Complex64::new(1.0, 0.0);
    let th = Complex64::new(theta, 0.0);
    match *case {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => {
            let xm = lambda_minus * th2;
            let xp = lambda_plus * th2;
            let c = ComplexMatrix3::from_diag([one, cosc(xm), cosc(xp)]);
            let s = ComplexMatrix3::from_diag([th, th * sinc(xm), th * sinc(xp)]);
            (c, s)
        }
        JordanCase::Defective { lambda } => {
            let x = lambda * th2;
            let mut c = ComplexMatrix3::from_diag([one, cosc(x), cosc(x)]);
            // d/dlambda cos(sqrt(lambda) theta) = -(theta/2 sqrt(lambda)) sin(...)
            c.set(1, 2, -sinc(x) * (0.5 * th2));
            let mut s = ComplexMatrix3::from_diag([th, th * sinc(x), th * sinc(x)]);
            s.set(1, 2, dsinc(x) * (th2 * theta));
            (c, s)
        }
    }
}

/// Jordan-frame entries of the antiderivatives `(∫C, ∫Sf)` over
/// `[0, theta]`, still in phase units.
fn frame_integral_entries(case: &JordanCase, theta: f64) -> (ComplexMatrix3, ComplexMatrix3) {
    let th2 = theta * theta;
    let th = Complex64::new(theta, 0.0);
    let half_th2 = Complex64::new(0.5 * th2, 0.0);
    match *case {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => {
            let xm = lambda_minus * th2;
            let xp = lambda_plus * th2;
            // ∫ cos(sqrt(l) u) du = sin(sqrt(l) theta)/sqrt(l)
            let ic = ComplexMatrix3::from_diag([th, th * sinc(xm), th * sinc(xp)]);
            // ∫ sin(sqrt(l) u)/sqrt(l) du = (1 - cos(sqrt(l) theta))/l
            let is = ComplexMatrix3::from_diag([
                half_th2,
                havc(xm) * th2,
                havc(xp) * th2,
            ]);
            (ic, is)
        }
        JordanCase::Defective { lambda } => {
            let x = lambda * th2;
            let mut ic = ComplexMatrix3::from_diag([th, th * sinc(x), th * sinc(x)]);
            ic.set(1, 2, dsinc(x) * (th2 * theta));
            let mut is =
                ComplexMatrix3::from_diag([half_th2, havc(x) * th2, havc(x) * th2]);
            is.set(1, 2, dhavc(x) * (th2 * th2));
            (ic, is)
        }
    }
}

/// `cos(Omega_hat omega0 t)` and `Omega_hat^-1 sin(Omega_hat omega0 t)`.
///
/// Exact identities at `t = 0`: `C = I`, `Sf = 0`.
pub fn propagator_pair(
    decomp: &SpectralDecomposition,
    omega0: f64,
    t: f64,
) -> PropagatorPair {
    if t == 0.0 {
        return PropagatorPair {
            c: ComplexMatrix3::identity(),
            sf: ComplexMatrix3::zero(),
            t,
            omega0,
        };
    }
    let theta = omega0 * t;
    let (fc, fs) = frame_entries(&decomp.case(), theta);
    PropagatorPair {
        c: *decomp.s_inv() * fc * *decomp.s(),
        sf: *decomp.s_inv() * fs * *decomp.s(),
        t,
        omega0,
    }
}

/// Closed-form time integrals `(∫0..t C dτ, ∫0..t Sf dτ)`.
pub fn integral_pair(
    decomp: &SpectralDecomposition,
    omega0: f64,
    t: f64,
) -> (ComplexMatrix3, ComplexMatrix3) {
    if t == 0.0 {
        return (ComplexMatrix3::zero(), ComplexMatrix3::zero());
    }
    let theta = omega0 * t;
    let (fic, fis) = frame_integral_entries(&decomp.case(), theta);
    let ic = (*decomp.s_inv() * fic * *decomp.s()).scale_re(1.0 / omega0);
    let is = (*decomp.s_inv() * fis * *decomp.s()).scale_re(1.0 / omega0);
    (ic, is)
}

/// Evolves an initial state (given at `t = 0`) to time `t`.
///
/// The electric amplitude follows the closed-form propagators; the magnetic
/// amplitude is the exact time integral of the curl of the electric field.
/// The decomposition must belong to `(m, initial.k)`.
pub fn evolve(
    initial: &FieldState,
    decomp: &SpectralDecomposition,
    m: &MaterialPair,
    t: f64,
) -> FieldState {
    debug_assert_eq!(initial.t, 0.0, "evolution starts from t = 0 data");
    if t == 0.0 {
        return initial.clone();
    }
    let k = &initial.k;
    let omega0 = k.omega0();
    let c_light = k.speed();
    let d_hat = build_curl_hat(k);

    // dE/dt(0) = omega0 * eps^-1 D_hat mu^-1 (c B0); phase-unit form.
    let cb0 = vscale(Complex64::new(c_light, 0.0), &initial.b);
    let edot_scaled = m.eps_inv().mul_vec(&d_hat.mul_vec(&m.mu_inv().mul_vec(&cb0)));

    if vnorm(&edot_scaled) > 0.0 {
        let null_frac = vdot(&k.as_complex(), &edot_scaled).norm()
            / (k.norm() * vnorm(&edot_scaled));
        if null_frac > TAU_NULL_WARN {
            log::warn!(
                "initial data excites the null direction (fraction {null_frac:.2e}); \
                 the secular omega0*t term of the null mode will contribute"
            );
        }
    }

    let theta = omega0 * t;
    let (fc, fs) = frame_entries(&decomp.case(), theta);
    let (fic, fis) = frame_integral_entries(&decomp.case(), theta);
    let s = decomp.s();
    let s_inv = decomp.s_inv();
    let cprop = *s_inv * fc * *s;
    let sfprop = *s_inv * fs * *s;
    let icprop = *s_inv * fic * *s;
    let isprop = *s_inv * fis * *s;

    let e = vadd(&cprop.mul_vec(&initial.e), &sfprop.mul_vec(&edot_scaled));

    // c B(t) = c B0 - D_hat [ (∫C) E0 + (∫Sf) Edot ] in phase units.
    let integral_term = vadd(
        &icprop.mul_vec(&initial.e),
        &isprop.mul_vec(&edot_scaled),
    );
    let cb = vsub(&cb0, &d_hat.mul_vec(&integral_term));
    let b = vscale(Complex64::new(1.0 / c_light, 0.0), &cb);

    FieldState {
        e,
        b,
        t,
        k: *k,
    }
}

/// Gauss-law invariants `(k† eps E, k† B)`; both stay constant in time.
pub fn gauss_invariants(state: &FieldState, m: &MaterialPair) -> (Complex64, Complex64) {
    let kc = state.k.as_complex();
    let eps_e = m.eps().mul_vec(&state.e);
    (vdot(&kc, &eps_e), vdot(&kc, &state.b))
}

/// Enumerates the time-harmonic plane-wave modes.
///
/// Diagonalizable operators carry two polarizations (the eigenvector
/// columns), each travelling in both senses; a defective operator retains
/// only its single true eigenvector.
pub fn time_harmonic_modes(
    decomp: &SpectralDecomposition,
    k: &WaveVector,
) -> Vec<PlaneWaveMode> {
    let omega0 = k.omega0();
    let mut modes = Vec::new();
    for (lambda, pol) in decomp.eigenpairs() {
        let root = principal_sqrt(lambda);
        for sense in [Sense::RightGoing, Sense::LeftGoing] {
            let sign = match sense {
                Sense::RightGoing => 1.0,
                Sense::LeftGoing => -1.0,
            };
            modes.push(PlaneWaveMode {
                polarization: pol,
                lambda,
                sqrt_lambda: root.sqrt_lambda,
                sense,
                growth_rate: sign * root.sqrt_lambda.im * omega0,
            });
        }
    }
    modes
}
