//! Independent ground-truth engines for validating the closed-form
//! pipeline: truncated defining series for the propagators, RK4 time
//! integration of the first-order field equations, Simpson quadrature for
//! the propagator integrals, and a characteristic-polynomial eigensolver.
//!
//! None of these share code with the spectral path they check.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::material::MaterialPair;
use crate::matrix::{vadd, vscale, ComplexMatrix3, Vec3};
use crate::propagate::FieldState;
use crate::spectral::{build_wave_operator, jordan_decompose_default, SpectralDecomposition, WaveOperator};
use crate::wave::{build_curl, WaveVector};

/// Partial sums of the defining propagator series.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub c: ComplexMatrix3,
    pub sf: ComplexMatrix3,
    pub terms_used: usize,
    pub last_term_norm: f64,
}

/// Sums `sum (-1)^n/(2n)! (theta^2 Omega2)^n` and
/// `theta * sum (-1)^n/(2n+1)! (theta^2 Omega2)^n` until the added term
/// drops below `tol` in Frobenius norm.
pub fn series_propagator(
    op: &WaveOperator,
    omega0_t: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    if omega0_t == 0.0 {
        return Ok(SeriesResult {
            c: ComplexMatrix3::identity(),
            sf: ComplexMatrix3::zero(),
            terms_used: 1,
            last_term_norm: 0.0,
        });
    }
    let theta2 = omega0_t * omega0_t;
    let step = op.matrix().scale_re(-theta2);
    let mut power = ComplexMatrix3::identity(); // (-theta^2 A)^n / (2n)!
    let mut c = power;
    let mut sf = power.scale_re(omega0_t);
    let mut last = power.fro_norm();
    for n in 1..=max_terms {
        let denom = ((2 * n - 1) * (2 * n)) as f64;
        power = (power * step).scale_re(1.0 / denom);
        let c_term = power;
        let s_term = power.scale_re(omega0_t / (2 * n + 1) as f64);
        c = c + c_term;
        sf = sf + s_term;
        last = c_term.fro_norm().max(s_term.fro_norm());
        if last <= tol {
            return Ok(SeriesResult {
                c,
                sf,
                terms_used: n + 1,
                last_term_norm: last,
            });
        }
    }
    Err(Error::NoConvergence {
        max_terms,
        last_term_norm: last,
    })
}

/// Classical fourth-order Runge-Kutta on the first-order system
/// `dE/dt = c^2 eps^-1 D mu^-1 B`, `dB/dt = -D E`.
pub fn rk4_evolve(
    m: &MaterialPair,
    k: &WaveVector,
    e0: Vec3,
    b0: Vec3,
    t_end: f64,
    h: f64,
) -> FieldState {
    assert!(h > 0.0 && t_end >= 0.0);
    let d = build_curl(k);
    let c2 = k.speed() * k.speed();
    let eps_inv = *m.eps_inv();
    let mu_inv = *m.mu_inv();
    let rhs = |e: &Vec3, b: &Vec3| -> (Vec3, Vec3) {
        let de = vscale(
            Complex64::new(c2, 0.0),
            &eps_inv.mul_vec(&d.mul_vec(&mu_inv.mul_vec(b))),
        );
        let db = vscale(Complex64::new(-1.0, 0.0), &d.mul_vec(e));
        (de, db)
    };
    let mut e = e0;
    let mut b = b0;
    let mut t = 0.0;
    while t < t_end {
        let step = h.min(t_end - t);
        let half = 0.5 * step;
        let (k1e, k1b) = rhs(&e, &b);
        let (k2e, k2b) = rhs(
            &vadd(&e, &vscale(Complex64::new(half, 0.0), &k1e)),
            &vadd(&b, &vscale(Complex64::new(half, 0.0), &k1b)),
        );
        let (k3e, k3b) = rhs(
            &vadd(&e, &vscale(Complex64::new(half, 0.0), &k2e)),
            &vadd(&b, &vscale(Complex64::new(half, 0.0), &k2b)),
        );
        let (k4e, k4b) = rhs(
            &vadd(&e, &vscale(Complex64::new(step, 0.0), &k3e)),
            &vadd(&b, &vscale(Complex64::new(step, 0.0), &k3b)),
        );
        let w = step / 6.0;
        for i in 0..3 {
            e[i] += w * (k1e[i] + 2.0 * k2e[i] + 2.0 * k3e[i] + k4e[i]);
            b[i] += w * (k1b[i] + 2.0 * k2b[i] + 2.0 * k3b[i] + k4b[i]);
        }
        t += step;
    }
    FieldState {
        e,
        b,
        t: t_end,
        k: *k,
    }
}

/// Composite Simpson integration of the closed-form propagators over
/// `[0, t]`; converges as `n_panels^-4`.
pub fn quadrature_integral(
    decomp: &SpectralDecomposition,
    omega0: f64,
    t: f64,
    n_panels: usize,
) -> (ComplexMatrix3, ComplexMatrix3) {
    assert!(
        n_panels >= 2 && n_panels.is_multiple_of(2),
        "Simpson needs an even panel count"
    );
    if t == 0.0 {
        return (ComplexMatrix3::zero(), ComplexMatrix3::zero());
    }
    let h = t / n_panels as f64;
    let mut ic = ComplexMatrix3::zero();
    let mut isf = ComplexMatrix3::zero();
    for i in 0..=n_panels {
        let tau = i as f64 * h;
        let pair = crate::propagate::propagator_pair(decomp, omega0, tau);
        let w = if i == 0 || i == n_panels {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        ic = ic + pair.c.scale_re(w);
        isf = isf + pair.sf.scale_re(w);
    }
    (ic.scale_re(h / 3.0), isf.scale_re(h / 3.0))
}

/// All eigenvalues of a 3x3 complex matrix from its characteristic cubic
/// (Cardano's formula with two Newton polish steps). Independent of the
/// deflation-based decomposition.
pub fn eigenvalues3(m: &ComplexMatrix3) -> [Complex64; 3] {
    // x^3 + p2 x^2 + p1 x + p0
    let p2 = -m.trace();
    let p1 = m.second_invariant();
    let p0 = -m.det();
    // Depress with x = y - p2/3.
    let shift = p2 / 3.0;
    let p = p1 - p2 * p2 / 3.0;
    let q = p2 * p2 * p2 * (2.0 / 27.0) - p2 * p1 / 3.0 + p0;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let sq = disc.sqrt();
    let cand1 = -q / 2.0 + sq;
    let cand2 = -q / 2.0 - sq;
    let u3 = if cand1.norm() >= cand2.norm() {
        cand1
    } else {
        cand2
    };
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut roots = [Complex64::new(0.0, 0.0); 3];
    if u3.norm() == 0.0 {
        // Triple root of the depressed cubic.
        for r in roots.iter_mut() {
            *r = -shift;
        }
    } else {
        let u = u3.cbrt();
        for (i, r) in roots.iter_mut().enumerate() {
            let uk = u * omega.powu(i as u32);
            let vk = -p / (uk * 3.0);
            *r = uk + vk - shift;
        }
    }
    // Newton polish on the undepressed cubic.
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let f = ((*r + p2) * *r + p1) * *r + p0;
            let df = (*r * 3.0 + p2 * 2.0) * *r + p1;
            if df.norm() > 0.0 {
                *r -= f / df;
            }
        }
    }
    roots
}

/// Worst-case distance between two spectra under the best pairing.
pub fn spectrum_distance(a: &[Complex64; 3], b: &[Complex64; 3]) -> f64 {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    perms
        .iter()
        .map(|p| {
            (0..3)
                .map(|i| (a[i] - b[p[i]]).norm())
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Frobenius-based condition estimate `||M||_F * ||M^-1||_F`.
pub fn cond_estimate(m: &ComplexMatrix3) -> f64 {
    match m.invert() {
        Ok(inv) => m.fro_norm() * inv.fro_norm(),
        Err(_) => f64::INFINITY,
    }
}

const COND_LIMIT: f64 = 100.0;
const EIGENBASIS_COND_LIMIT: f64 = 1e4;

fn random_matrix<R: Rng>(rng: &mut R) -> ComplexMatrix3 {
    let mut rows = [[Complex64::new(0.0, 0.0); 3]; 3];
    for row in rows.iter_mut() {
        for z in row.iter_mut() {
            *z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    ComplexMatrix3::from_rows(rows)
}

pub fn random_wavevector<R: Rng>(rng: &mut R) -> WaveVector {
    loop {
        let k = WaveVector::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            1.0,
        );
        if let Ok(k) = k {
            if k.norm() >= 0.3 {
                return k;
            }
        }
    }
}

/// Rejection-samples a conditioned random medium with a wavevector:
/// tensor entries uniform in the complex unit square, both condition
/// estimates at most 100, a diagonalizable operator, and an eigenbasis
/// condition estimate at most 1e4. Near-defective draws are excluded so
/// that statistical tolerances stay meaningful.
pub fn sample_conditioned_medium<R: Rng>(
    rng: &mut R,
) -> (MaterialPair, WaveVector, SpectralDecomposition) {
    loop {
        let eps = random_matrix(rng);
        let mu = random_matrix(rng);
        if cond_estimate(&eps) > COND_LIMIT || cond_estimate(&mu) > COND_LIMIT {
            continue;
        }
        let m = match MaterialPair::new(eps, mu) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let k = random_wavevector(rng);
        let op = build_wave_operator(&m, &k);
        let d = match jordan_decompose_default(&op) {
            Ok(d) => d,
            Err(_) => continue,
        };
        if d.is_defective() {
            continue;
        }
        if d.s().fro_norm() * d.s_inv().fro_norm() > EIGENBASIS_COND_LIMIT {
            continue;
        }
        return (m, k, d);
    }
}

/// Conditioned random complex symmetric tensor entries.
pub fn sample_symmetric_params<R: Rng>(rng: &mut R) -> crate::scenarios::Example2Params {
    loop {
        let mut z = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let p = crate::scenarios::Example2Params {
            a: z(),
            b: z(),
            c: z(),
            g: z(),
            h: z(),
            u: z(),
        };
        let lam = p.lambda_matrix();
        if cond_estimate(&lam) <= COND_LIMIT {
            return p;
        }
    }
}
