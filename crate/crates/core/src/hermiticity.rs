//! Classification of the wave operator as quasi-Hermitian,
//! pseudo-Hermitian-only, or neither.
//!
//! Two complementary routes are implemented: direct matrix tests (a metric
//! residual against the permittivity tensor, plus spectral reality and
//! conjugation closure) and, for the uniaxial gyrotropic family, closed-form
//! conditions on the scalar material parameters. The gauge split isolates
//! the `k k†` parts of the inverse tensors, which never reach the
//! propagating field.

use num_complex::Complex64;

use crate::matrix::{vdot, ComplexMatrix3};
use crate::spectral::{JordanCase, SpectralDecomposition, WaveOperator};
use crate::tolerances::{TAU_CLASS, TAU_COND};
use crate::wave::{outer_kk, WaveVector};

/// Three-way verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    QuasiHermitian,
    PseudoHermitianOnly,
    NonPseudoHermitian,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::QuasiHermitian => "quasi-hermitian",
            Verdict::PseudoHermitianOnly => "pseudo-hermitian-only",
            Verdict::NonPseudoHermitian => "non-pseudo-hermitian",
        }
    }
}

/// Verdict plus the residuals it was decided on.
///
/// `metric_pseudo` is the permittivity-metric similarity test;
/// `spectrum_conjugation_closed` is the spectral route. Either one counts
/// as pseudo-Hermitian for the verdict.
#[derive(Debug, Clone, Copy)]
pub struct HermiticityClass {
    pub verdict: Verdict,
    pub pseudo_residual: f64,
    pub eigenvalue_reality_defect: f64,
    pub diagonalizable: bool,
    pub metric_pseudo: bool,
    pub spectrum_conjugation_closed: bool,
}

/// Residual of `Omega2† = eps Omega2 eps^-1`, normalized by
/// `max(1, ||Omega2||_F)`. Tests similarity in the specific metric given by
/// the permittivity tensor, not existence of some other metric.
pub fn check_pseudo_hermitian(op: &WaveOperator) -> (bool, f64) {
    let a = op.matrix();
    let eps = op.materials().eps();
    let eps_inv = op.materials().eps_inv();
    let residual =
        (a.adjoint() - *eps * *a * *eps_inv).fro_norm() / a.fro_norm().max(1.0);
    (residual <= TAU_CLASS, residual)
}

/// Distance of the spectrum from being closed under complex conjugation.
fn conjugation_closure_defect(eigs: &[Complex64; 3]) -> f64 {
    let mut worst = 0.0f64;
    for z in eigs {
        let zc = z.conj();
        let nearest = eigs
            .iter()
            .map(|w| (w - zc).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
    }
    worst
}

/// Spectral classification.
///
/// Quasi-Hermitian means diagonalizable with a real nonzero spectrum (a
/// diagonalizable 3x3 matrix with real eigenvalues is similar to a
/// Hermitian one). Pseudo-Hermitian-only requires either the metric test
/// or a conjugation-closed spectrum, without the quasi conditions.
pub fn classify(decomp: &SpectralDecomposition, op: &WaveOperator) -> HermiticityClass {
    let (metric_pseudo, pseudo_residual) = check_pseudo_hermitian(op);
    let scale = op.matrix().fro_norm().max(1.0);
    let eigs = decomp.eigenvalues();
    let reality_defect = match decomp.case() {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => lambda_minus.im.abs().max(lambda_plus.im.abs()),
        JordanCase::Defective { lambda } => lambda.im.abs(),
    };
    let diagonalizable = !decomp.is_defective();
    let conj_defect = conjugation_closure_defect(&eigs);
    let spectrum_conjugation_closed = conj_defect <= TAU_CLASS * scale;
    let quasi = diagonalizable && reality_defect <= TAU_CLASS * scale;
    let pseudo = metric_pseudo || spectrum_conjugation_closed;
    let verdict = if quasi {
        Verdict::QuasiHermitian
    } else if pseudo {
        Verdict::PseudoHermitianOnly
    } else {
        Verdict::NonPseudoHermitian
    };
    HermiticityClass {
        verdict,
        pseudo_residual,
        eigenvalue_reality_defect: reality_defect,
        diagonalizable,
        metric_pseudo,
        spectrum_conjugation_closed,
    }
}

/// Scalar parameters of the uniaxial gyrotropic medium: transverse entries
/// `eps1 + i gamma_eps` with off-diagonal coupling `i alpha`, axis entry
/// `eps3`, and the same pattern for the permeability with `mu1, gamma_mu,
/// beta, mu3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Example1Params {
    pub eps1: f64,
    pub eps3: f64,
    pub mu1: f64,
    pub mu3: f64,
    pub gamma_eps: f64,
    pub gamma_mu: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Default for Example1Params {
    fn default() -> Self {
        Self {
            eps1: 1.0,
            eps3: 1.0,
            mu1: 1.0,
            mu3: 1.0,
            gamma_eps: 0.0,
            gamma_mu: 0.0,
            alpha: 0.0,
            beta: 0.0,
        }
    }
}

impl Example1Params {
    /// The two transverse-block eigenvalues of the wave operator for axial
    /// propagation, in closed form. The minus label pairs with the
    /// clockwise-circular polarization.
    pub fn lambda_pm(&self) -> (Complex64, Complex64) {
        let e_minus = Complex64::new(self.eps1 - self.alpha, self.gamma_eps);
        let m_minus = Complex64::new(self.mu1 - self.beta, self.gamma_mu);
        let e_plus = Complex64::new(self.eps1 + self.alpha, self.gamma_eps);
        let m_plus = Complex64::new(self.mu1 + self.beta, self.gamma_mu);
        (
            Complex64::new(1.0, 0.0) / (e_minus * m_minus),
            Complex64::new(1.0, 0.0) / (e_plus * m_plus),
        )
    }
}

/// Closed-form verdict from the scalar parameters alone.
///
/// Quasi-Hermitian iff the loss terms vanish, or `eps1*beta = mu1*alpha`
/// together with `eps1*gamma_mu + mu1*gamma_eps = 0`. Pseudo-Hermitian-only
/// iff `mu1*alpha != 0`, `eps1*beta + mu1*alpha = 0` and the same gamma
/// balance, without the quasi conditions.
pub fn example1_conditions(p: &Example1Params) -> Verdict {
    let near_zero = |x: f64, scale: f64| x.abs() <= TAU_COND * (1.0 + scale);
    let gamma_scale = p.gamma_eps.abs() + p.gamma_mu.abs();
    let cross_scale = (p.eps1 * p.beta).abs() + (p.mu1 * p.alpha).abs();
    let gamma_balance = near_zero(
        p.eps1 * p.gamma_mu + p.mu1 * p.gamma_eps,
        (p.eps1 * p.gamma_mu).abs() + (p.mu1 * p.gamma_eps).abs(),
    );
    let lossless = near_zero(p.gamma_eps, gamma_scale) && near_zero(p.gamma_mu, gamma_scale);
    if lossless || (near_zero(p.eps1 * p.beta - p.mu1 * p.alpha, cross_scale) && gamma_balance) {
        return Verdict::QuasiHermitian;
    }
    let mu_alpha_nonzero = !near_zero(p.mu1 * p.alpha, cross_scale);
    if mu_alpha_nonzero
        && near_zero(p.eps1 * p.beta + p.mu1 * p.alpha, cross_scale)
        && gamma_balance
    {
        return Verdict::PseudoHermitianOnly;
    }
    Verdict::NonPseudoHermitian
}

/// Split of a tensor into Hermitian/anti-Hermitian parts, each further
/// separated into its `k k†` component and a Frobenius-orthogonal
/// remainder: `M = H0 + alpha k k† + A0 + i beta k k†`.
#[derive(Debug, Clone)]
pub struct GaugeParts {
    pub h0: ComplexMatrix3,
    pub a0: ComplexMatrix3,
    pub alpha: f64,
    pub beta: f64,
}

pub fn gauge_decompose(m: &ComplexMatrix3, k: &WaveVector) -> GaugeParts {
    let h = m.hermitian_part();
    let a = m.anti_hermitian_part();
    let kc = k.as_complex();
    let k4 = k.norm().powi(4);
    // Frobenius projections onto span{k k†}; k† H k is real for Hermitian H
    // and k† A k is imaginary for anti-Hermitian A.
    let alpha = vdot(&kc, &h.mul_vec(&kc)).re / k4;
    let beta = vdot(&kc, &a.mul_vec(&kc)).im / k4;
    let kk = outer_kk(k);
    let h0 = h - kk.scale_re(alpha);
    let a0 = a - kk.scale(Complex64::new(0.0, beta));
    GaugeParts { h0, a0, alpha, beta }
}

/// Predicts pseudo/quasi-Hermiticity from the gauge splits of the inverse
/// tensors: pseudo requires both anti-Hermitian remainders to vanish, quasi
/// additionally a positive-definite Hermitian remainder of the inverse
/// permittivity on the complement of `span{k}`.
pub fn pseudo_by_gauge(eps_inv_parts: &GaugeParts, mu_inv_parts: &GaugeParts, k: &WaveVector) -> (bool, bool) {
    let scale_e = eps_inv_parts.h0.fro_norm().max(1.0);
    let scale_m = mu_inv_parts.h0.fro_norm().max(1.0);
    let pseudo = eps_inv_parts.a0.fro_norm() <= TAU_CLASS * scale_e
        && mu_inv_parts.a0.fro_norm() <= TAU_CLASS * scale_m;
    if !pseudo {
        return (false, false);
    }
    // Restrict H0(eps^-1) to the orthogonal complement of k.
    let khat = k.unit();
    let frame = complement_frame(khat);
    let h0 = &eps_inv_parts.h0;
    let q1 = crate::matrix::real_vec(frame.0);
    let q2 = crate::matrix::real_vec(frame.1);
    let r11 = vdot(&q1, &h0.mul_vec(&q1)).re;
    let r22 = vdot(&q2, &h0.mul_vec(&q2)).re;
    let r12 = vdot(&q1, &h0.mul_vec(&q2));
    let mean = 0.5 * (r11 + r22);
    let rad = (0.25 * (r11 - r22).powi(2) + r12.norm_sqr()).sqrt();
    let min_eig = mean - rad;
    let quasi = min_eig > TAU_CLASS * scale_e;
    (pseudo, quasi)
}

fn complement_frame(khat: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let s = if khat[0] >= 0.0 { 1.0 } else { -1.0 };
    let v = [khat[0] + s, khat[1], khat[2]];
    let vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    let reflect = |e: [f64; 3]| -> [f64; 3] {
        let ve = v[0] * e[0] + v[1] * e[1] + v[2] * e[2];
        let f = 2.0 * ve / vv;
        [
            -s * (e[0] - f * v[0]),
            -s * (e[1] - f * v[1]),
            -s * (e[2] - f * v[2]),
        ]
    };
    (reflect([0.0, 1.0, 0.0]), reflect([0.0, 0.0, 1.0]))
}
