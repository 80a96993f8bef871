//! The dimensionless wave operator and its Jordan canonical decomposition.
//!
//! The operator `eps_inv * D_hat * mu_inv * D_hat` always annihilates the
//! wavevector, so one eigenvalue is structurally zero. That zero mode is
//! deflated exactly onto `span{k}` and the remaining 2x2 action is
//! classified as diagonalizable (two eigenpairs, possibly coincident) or
//! defective (a single 2x2 Jordan block).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::material::MaterialPair;
use crate::matrix::{vdot, vnorm, vscale, vsub, ComplexMatrix3, Vec3};
use crate::tolerances::TAU_JORDAN;
use crate::wave::{build_curl_hat, WaveVector};

/// Dimensionless wave operator together with its provenance.
#[derive(Debug, Clone)]
pub struct WaveOperator {
    matrix: ComplexMatrix3,
    k: WaveVector,
    materials: MaterialPair,
}

impl WaveOperator {
    pub fn matrix(&self) -> &ComplexMatrix3 {
        &self.matrix
    }

    pub fn k(&self) -> &WaveVector {
        &self.k
    }

    pub fn materials(&self) -> &MaterialPair {
        &self.materials
    }
}

/// Assembles `eps_inv * D_hat * mu_inv * D_hat` with `D_hat = D/|k|`.
///
/// The material pair carries validated inverses, so this cannot fail;
/// singular tensors are rejected when the pair is constructed.
pub fn build_wave_operator(m: &MaterialPair, k: &WaveVector) -> WaveOperator {
    let d_hat = build_curl_hat(k);
    let matrix = *m.eps_inv() * d_hat * *m.mu_inv() * d_hat;
    WaveOperator {
        matrix,
        k: *k,
        materials: m.clone(),
    }
}

/// A complex number with its principal square root.
///
/// The branch cut runs along the negative real axis; the root satisfies
/// `Re >= 0`, and `Im >= 0` when `Re = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchedRoot {
    pub lambda: Complex64,
    pub sqrt_lambda: Complex64,
}

pub fn principal_sqrt(lambda: Complex64) -> BranchedRoot {
    let mut s = lambda.sqrt();
    // Normalize the cut: map a -0.0 imaginary part onto the upper side.
    if s.re == 0.0 && s.im < 0.0 {
        s = -s;
    }
    if s.re == -0.0 {
        s.re = 0.0;
    }
    BranchedRoot {
        lambda,
        sqrt_lambda: s,
    }
}

/// Canonical form of the deflated 2x2 action.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JordanCase {
    Diagonalizable {
        lambda_minus: Complex64,
        lambda_plus: Complex64,
    },
    Defective {
        lambda: Complex64,
    },
}

/// Jordan data of a wave operator: `Omega2 = S^-1 J S`.
///
/// The columns of `S^-1` are the unit wavevector followed by the
/// (generalized) eigenvectors; `J` is `diag(0, lambda_minus, lambda_plus)`
/// or the zero entry plus one 2x2 Jordan block with unit superdiagonal.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    case: JordanCase,
    s: ComplexMatrix3,
    s_inv: ComplexMatrix3,
    j: ComplexMatrix3,
}

impl SpectralDecomposition {
    pub fn case(&self) -> JordanCase {
        self.case
    }

    pub fn is_defective(&self) -> bool {
        matches!(self.case, JordanCase::Defective { .. })
    }

    pub fn s(&self) -> &ComplexMatrix3 {
        &self.s
    }

    pub fn s_inv(&self) -> &ComplexMatrix3 {
        &self.s_inv
    }

    pub fn j(&self) -> &ComplexMatrix3 {
        &self.j
    }

    /// All three eigenvalues, the structural zero first.
    pub fn eigenvalues(&self) -> [Complex64; 3] {
        let zero = Complex64::new(0.0, 0.0);
        match self.case {
            JordanCase::Diagonalizable {
                lambda_minus,
                lambda_plus,
            } => [zero, lambda_minus, lambda_plus],
            JordanCase::Defective { lambda } => [zero, lambda, lambda],
        }
    }

    /// Nonzero eigenvalues paired with their eigenvector columns of `S^-1`.
    /// In the defective case only the single true eigenvector is returned.
    pub fn eigenpairs(&self) -> Vec<(Complex64, Vec3)> {
        match self.case {
            JordanCase::Diagonalizable {
                lambda_minus,
                lambda_plus,
            } => vec![
                (lambda_minus, self.s_inv.col(1)),
                (lambda_plus, self.s_inv.col(2)),
            ],
            JordanCase::Defective { lambda } => vec![(lambda, self.s_inv.col(1))],
        }
    }
}

/// Orthonormal frame `[khat, q2, q3]` built from one Householder reflector.
fn orthonormal_frame(khat: [f64; 3]) -> [[f64; 3]; 3] {
    let s = if khat[0] >= 0.0 { 1.0 } else { -1.0 };
    let v = [khat[0] + s, khat[1], khat[2]];
    let vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    // Columns of -s * (I - 2 v v^T / v^T v); the first is khat itself.
    let reflect = |e: [f64; 3]| -> [f64; 3] {
        let ve = v[0] * e[0] + v[1] * e[1] + v[2] * e[2];
        let f = 2.0 * ve / vv;
        [
            -s * (e[0] - f * v[0]),
            -s * (e[1] - f * v[1]),
            -s * (e[2] - f * v[2]),
        ]
    };
    [khat, reflect([0.0, 1.0, 0.0]), reflect([0.0, 0.0, 1.0])]
}

/// Roots of `x^2 - tr x + det`, largest magnitude first, avoiding
/// cancellation in the small root.
fn quadratic_eigs(tr: Complex64, det: Complex64) -> (Complex64, Complex64) {
    let disc = tr * tr - det * 4.0;
    let mut s = disc.sqrt();
    if (tr.conj() * s).re < 0.0 {
        s = -s;
    }
    let l1 = (tr + s) * 0.5;
    if l1.norm() > 0.0 {
        (l1, det / l1)
    } else {
        (l1, (tr - s) * 0.5)
    }
}

/// Singular values and leading singular pair of a 2x2 complex matrix.
/// Returns `(sigma1, sigma2, u1, v1)` with `N v1 = sigma1 u1`.
fn svd2(n: [[Complex64; 2]; 2]) -> (f64, f64, [Complex64; 2], [Complex64; 2]) {
    let p = n[0][0].norm_sqr() + n[1][0].norm_sqr();
    let q = n[0][1].norm_sqr() + n[1][1].norm_sqr();
    let r = n[0][0].conj() * n[0][1] + n[1][0].conj() * n[1][1];
    let mean = 0.5 * (p + q);
    let delta = 0.5 * (p - q);
    let rad = (delta * delta + r.norm_sqr()).sqrt();
    let s1 = (mean + rad).max(0.0).sqrt();
    let s2 = (mean - rad).max(0.0).sqrt();
    let v1 = if r.norm() > 1e-300 {
        normalize2([r, Complex64::new(mean + rad - p, 0.0)])
    } else if p >= q {
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
    } else {
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
    };
    let nv = mul2(&n, &v1);
    let u1 = if s1 > 0.0 {
        [nv[0] / s1, nv[1] / s1]
    } else {
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
    };
    (s1, s2, u1, v1)
}

fn normalize2(v: [Complex64; 2]) -> [Complex64; 2] {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

fn mul2(m: &[[Complex64; 2]; 2], v: &[Complex64; 2]) -> [Complex64; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

/// Scale factor that gives a vector unit norm and a real positive
/// largest-magnitude component.
fn gauge_factor(v: &Vec3) -> Complex64 {
    let norm = vnorm(v);
    let mut idx = 0;
    let mut best = 0.0;
    for (i, z) in v.iter().enumerate() {
        if z.norm() > best {
            best = z.norm();
            idx = i;
        }
    }
    let phase = v[idx] / v[idx].norm();
    phase.conj() / norm
}

struct Deflated {
    q: [[f64; 3]; 3],
    coupling: [Complex64; 2],
    block: [[Complex64; 2]; 2],
}

fn deflate(a: &ComplexMatrix3, k: &WaveVector) -> Deflated {
    let q = orthonormal_frame(k.unit());
    let qv = |col: [f64; 3]| -> Vec3 { crate::matrix::real_vec(col) };
    let q1 = qv(q[0]);
    let q2 = qv(q[1]);
    let q3 = qv(q[2]);
    let a2 = a.mul_vec(&q2);
    let a3 = a.mul_vec(&q3);
    Deflated {
        q,
        coupling: [vdot(&q1, &a2), vdot(&q1, &a3)],
        block: [
            [vdot(&q2, &a2), vdot(&q2, &a3)],
            [vdot(&q3, &a2), vdot(&q3, &a3)],
        ],
    }
}

/// Lifts 2x2 coordinates `w` with first-frame coordinate `a0` back to R^3.
fn lift(d: &Deflated, a0: Complex64, w: [Complex64; 2]) -> Vec3 {
    let mut v = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        v[i] = a0 * d.q[0][i] + w[0] * d.q[1][i] + w[1] * d.q[2][i];
    }
    v
}

const CIRCULAR_PARALLEL_TOL: f64 = 1e-6;

/// For axial propagation, index of the eigenvector parallel to `(1, i, 0)`
/// (clockwise circular), if exactly one of the two qualifies.
fn circular_minus_index(k: &WaveVector, v1: &Vec3, v2: &Vec3) -> Option<usize> {
    if !k.is_axial() {
        return None;
    }
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let circ_minus: Vec3 = [one, i, zero];
    let p1 = crate::matrix::parallel_residual(&circ_minus, v1) < CIRCULAR_PARALLEL_TOL;
    let p2 = crate::matrix::parallel_residual(&circ_minus, v2) < CIRCULAR_PARALLEL_TOL;
    match (p1, p2) {
        (true, false) => Some(0),
        (false, true) => Some(1),
        _ => None,
    }
}

/// Jordan decomposition with the structural zero deflated onto `span{k}`.
///
/// `tol` controls both the eigenvalue-equality test and the rank probe of
/// the deflated block ([`TAU_JORDAN`] is the conventional default). Fails
/// when the similarity reconstruction residual exceeds `100 * tol`,
/// signalling an ill-conditioned eigenbasis.
pub fn jordan_decompose(op: &WaveOperator, tol: f64) -> Result<SpectralDecomposition> {
    let a = op.matrix();
    let k = op.k();
    let scale = a.fro_norm().max(1.0);
    let d = deflate(a, k);

    let tr = d.block[0][0] + d.block[1][1];
    let det = d.block[0][0] * d.block[1][1] - d.block[0][1] * d.block[1][0];
    let (l1, l2) = quadratic_eigs(tr, det);

    let khat = crate::matrix::real_vec(k.unit());
    // A true double root splits by about sqrt(eps) * ||M|| through the
    // quadratic discriminant; the equality window must not be narrower than
    // that noise floor.
    let block_norm = d
        .block
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let root_noise = 32.0 * f64::EPSILON.sqrt() * block_norm.max(1.0);
    let equal = (l1 - l2).norm() <= (tol * (1.0 + l1.norm() + l2.norm())).max(root_noise);

    // The equality test alone cannot separate a scalar block, a Jordan
    // block, and a tight simple pair; the singular values of `M - lambda I`
    // settle it, with a fall-through to the simple-pair path when both stay
    // large.
    let mut resolved: Option<(JordanCase, [Vec3; 3])> = None;
    if equal {
        let lambda = (l1 + l2) * 0.5;
        let n = [
            [d.block[0][0] - lambda, d.block[0][1]],
            [d.block[1][0], d.block[1][1] - lambda],
        ];
        let (s1, s2, u1, v1) = svd2(n);
        if s1 <= tol * scale {
            // Scalar block: geometric multiplicity two.
            let (va, vb) = degenerate_eigenbasis(op)?;
            resolved = Some((
                JordanCase::Diagonalizable {
                    lambda_minus: lambda,
                    lambda_plus: lambda,
                },
                [khat, va, vb],
            ));
        } else if s2 <= tol * scale {
            // Rank one: one eigenvector, one generalized eigenvector.
            // For a nilpotent 2x2 block the range equals the kernel, so the
            // leading left singular vector is the eigendirection and
            // v1/sigma1 solves the chain equation with minimal norm.
            let w1 = u1;
            let w2 = [v1[0] / s1, v1[1] / s1];
            if lambda.norm() <= tol * scale {
                return Err(Error::DecompositionFailure {
                    reason: "defective block with vanishing eigenvalue",
                    residual: lambda.norm(),
                });
            }
            let a1 = (d.coupling[0] * w1[0] + d.coupling[1] * w1[1]) / lambda;
            let a2 = (d.coupling[0] * w2[0] + d.coupling[1] * w2[1] - a1) / lambda;
            let mut e1 = lift(&d, a1, w1);
            let mut e2 = lift(&d, a2, w2);
            // One common factor keeps the unit superdiagonal intact.
            let g = gauge_factor(&e1);
            e1 = vscale(g, &e1);
            e2 = vscale(g, &e2);
            resolved = Some((JordanCase::Defective { lambda }, [khat, e1, e2]));
        }
    }

    let (case, columns) = if let Some(r) = resolved {
        r
    } else {
        let mut pairs = Vec::with_capacity(2);
        for &lambda in &[l1, l2] {
            let w = block_eigenvector(&d.block, lambda);
            if lambda.norm() <= tol * scale {
                return Err(Error::DecompositionFailure {
                    reason: "nonstructural eigenvalue too close to zero",
                    residual: lambda.norm(),
                });
            }
            let a0 = (d.coupling[0] * w[0] + d.coupling[1] * w[1]) / lambda;
            let mut v = lift(&d, a0, w);
            v = vscale(gauge_factor(&v), &v);
            pairs.push((lambda, v));
        }
        // Clockwise-circular eigenvector takes the minus label on the axis;
        // otherwise order lexicographically by (Re, Im).
        let minus_first = match circular_minus_index(k, &pairs[0].1, &pairs[1].1) {
            Some(idx) => idx == 0,
            None => {
                let (a, b) = (pairs[0].0, pairs[1].0);
                (a.re, a.im) <= (b.re, b.im)
            }
        };
        let (minus, plus) = if minus_first {
            (pairs[0], pairs[1])
        } else {
            (pairs[1], pairs[0])
        };
        (
            JordanCase::Diagonalizable {
                lambda_minus: minus.0,
                lambda_plus: plus.0,
            },
            [khat, minus.1, plus.1],
        )
    };

    let s_inv = ComplexMatrix3::from_rows([
        [columns[0][0], columns[1][0], columns[2][0]],
        [columns[0][1], columns[1][1], columns[2][1]],
        [columns[0][2], columns[1][2], columns[2][2]],
    ]);
    let s = s_inv.invert().map_err(|_| Error::DecompositionFailure {
        reason: "similarity matrix is singular",
        residual: f64::INFINITY,
    })?;

    let j = canonical_j(&case);
    let decomp = SpectralDecomposition {
        case,
        s,
        s_inv,
        j,
    };

    let rec = (decomp.s_inv * decomp.j * decomp.s - *a).fro_norm();
    let ident = (decomp.s * decomp.s_inv - ComplexMatrix3::identity()).fro_norm();
    let limit = 100.0 * tol * scale;
    if rec > limit || ident > limit {
        return Err(Error::DecompositionFailure {
            reason: "reconstruction residual too large",
            residual: rec.max(ident) / scale,
        });
    }
    Ok(decomp)
}

/// Decomposition with the default threshold.
pub fn jordan_decompose_default(op: &WaveOperator) -> Result<SpectralDecomposition> {
    jordan_decompose(op, TAU_JORDAN)
}

fn canonical_j(case: &JordanCase) -> ComplexMatrix3 {
    let zero = Complex64::new(0.0, 0.0);
    match *case {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => ComplexMatrix3::from_diag([zero, lambda_minus, lambda_plus]),
        JordanCase::Defective { lambda } => {
            let mut j = ComplexMatrix3::from_diag([zero, lambda, lambda]);
            j.set(1, 2, Complex64::new(1.0, 0.0));
            j
        }
    }
}

/// Eigenvector of a 2x2 block for a simple eigenvalue, taken orthogonal to
/// the larger row of `M - lambda I`.
fn block_eigenvector(m: &[[Complex64; 2]; 2], lambda: Complex64) -> [Complex64; 2] {
    let r0 = [m[0][0] - lambda, m[0][1]];
    let r1 = [m[1][0], m[1][1] - lambda];
    let n0 = r0[0].norm_sqr() + r0[1].norm_sqr();
    let n1 = r1[0].norm_sqr() + r1[1].norm_sqr();
    let w = if n0 >= n1 {
        [-r0[1], r0[0]]
    } else {
        [-r1[1], r1[0]]
    };
    normalize2(w)
}

/// Eigenbasis of a doubly degenerate nonzero eigenvalue.
///
/// When the deflated block is scalar, the eigenspace is the full bilinear
/// complement of the left null covector `k† eps`. Cross products of that
/// covector with coordinate axes give a deterministic basis; the (e2, e3)
/// pair is preferred and the fallbacks cover covectors with a vanishing
/// first component.
fn degenerate_eigenbasis(op: &WaveOperator) -> Result<(Vec3, Vec3)> {
    let ell = op.materials().eps().transpose().mul_vec(&op.k().as_complex());
    let linf = ell.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if linf == 0.0 {
        return Err(Error::DecompositionFailure {
            reason: "left null covector vanished",
            residual: 0.0,
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let axes: [Vec3; 3] = [
        [one, zero, zero],
        [zero, one, zero],
        [zero, zero, one],
    ];
    // (pair, component that must not vanish)
    let choices = [((1usize, 2usize), 0usize), ((0, 2), 1), ((0, 1), 2)];
    let mut pick = None;
    for &((a, b), need) in &choices {
        if ell[need].norm() > 1e-3 * linf {
            pick = Some((a, b));
            break;
        }
    }
    let (a, b) = pick.unwrap_or_else(|| {
        let mut idx = 0;
        for i in 1..3 {
            if ell[i].norm() > ell[idx].norm() {
                idx = i;
            }
        }
        match idx {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    });
    let mut va = crate::matrix::vcross(&ell, &axes[a]);
    let mut vb = crate::matrix::vcross(&ell, &axes[b]);
    va = vscale(gauge_factor(&va), &va);
    vb = vscale(gauge_factor(&vb), &vb);
    Ok((va, vb))
}

/// Residual of an eigenpair claim `A v = lambda v`, relative to `||A||_F`.
pub fn eigenpair_residual(a: &ComplexMatrix3, lambda: Complex64, v: &Vec3) -> f64 {
    let av = a.mul_vec(v);
    let lv = vscale(lambda, v);
    vnorm(&vsub(&av, &lv)) / (a.fro_norm().max(1.0) * vnorm(v))
}

/// Residual of the chain claim `(A - lambda) v2 = v1`, relative to `||A||_F`.
pub fn chain_residual(a: &ComplexMatrix3, lambda: Complex64, v1: &Vec3, v2: &Vec3) -> f64 {
    let av2 = a.mul_vec(v2);
    let rhs = vsub(&vsub(&av2, &vscale(lambda, v2)), v1);
    vnorm(&rhs) / a.fro_norm().max(1.0)
}

/// Left-null consistency `k† eps * Omega2 = 0` and right-null `Omega2 k = 0`.
pub fn null_residuals(op: &WaveOperator) -> (f64, f64) {
    let a = op.matrix();
    let kc = op.k().as_complex();
    let right = vnorm(&a.mul_vec(&kc)) / (a.fro_norm().max(1.0) * op.k().norm());
    let eps_t_k = op.materials().eps().transpose().mul_vec(&kc);
    // row vector (k† eps) A = (Aᵀ (epsᵀ k))ᵀ
    let left_vec = a.transpose().mul_vec(&eps_t_k);
    let left = vnorm(&left_vec) / (a.fro_norm().max(1.0) * vnorm(&eps_t_k));
    (right, left)
}
