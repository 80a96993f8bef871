//! Dense 3x3 complex matrices and small-vector helpers.
//!
//! Fixed-size, allocation-free building blocks for the wave-operator
//! algebra. Inversion uses the adjugate formula with a scale-invariant
//! determinant threshold.

use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances::TAU_DET;

/// Complex 3-vector.
pub type Vec3 = [Complex64; 3];

/// 3x3 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix3 {
    entries: [[Complex64; 3]; 3],
}

impl ComplexMatrix3 {
    pub fn zero() -> Self {
        Self {
            entries: [[Complex64::new(0.0, 0.0); 3]; 3],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3]) -> Self {
        Self { entries: rows }
    }

    pub fn from_diag(d: Vec3) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = d[i];
        }
        m
    }

    /// Outer product `a b†`.
    pub fn outer(a: &Vec3, b: &Vec3) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = a[i] * b[j].conj();
            }
        }
        m
    }

    pub fn rows(&self) -> &[[Complex64; 3]; 3] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec3 {
        self.entries[i]
    }

    pub fn col(&self, j: usize) -> Vec3 {
        [self.entries[0][j], self.entries[1][j], self.entries[2][j]]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.entries[i][j] = z;
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = self.entries[j][i];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = m.entries[i][j].conj();
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sum of the three principal 2x2 minors (second characteristic invariant).
    pub fn second_invariant(&self) -> Complex64 {
        let m = &self.entries;
        (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[0][0] * m[1][1] - m[0][1] * m[1][0])
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Hermitian part `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale_re(0.5)
    }

    /// Anti-Hermitian part `(M - M†)/2`; together with [`hermitian_part`]
    /// it reconstructs the matrix to a few ulps.
    ///
    /// [`hermitian_part`]: ComplexMatrix3::hermitian_part
    pub fn anti_hermitian_part(&self) -> Self {
        (*self - self.adjoint()).scale_re(0.5)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] *= z;
            }
        }
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] *= s;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i] += self.entries[i][j] * v[j];
            }
        }
        out
    }

    /// Inverse via the adjugate formula.
    ///
    /// Fails with [`Error::SingularMatrix`] when `|det| < TAU_DET * ||M||_F^3`.
    pub fn invert(&self) -> Result<Self> {
        let det = self.det();
        let scale = self.fro_norm();
        let tau = TAU_DET * scale * scale * scale;
        if scale == 0.0 || det.norm() < tau || det.norm() == 0.0 {
            return Err(Error::SingularMatrix {
                det_abs: det.norm(),
            });
        }
        let m = &self.entries;
        let cof = |a: Complex64, b: Complex64, c: Complex64, d: Complex64| a * d - b * c;
        // Adjugate: transposed cofactor matrix.
        let adj = [
            [
                cof(m[1][1], m[1][2], m[2][1], m[2][2]),
                -cof(m[0][1], m[0][2], m[2][1], m[2][2]),
                cof(m[0][1], m[0][2], m[1][1], m[1][2]),
            ],
            [
                -cof(m[1][0], m[1][2], m[2][0], m[2][2]),
                cof(m[0][0], m[0][2], m[2][0], m[2][2]),
                -cof(m[0][0], m[0][2], m[1][0], m[1][2]),
            ],
            [
                cof(m[1][0], m[1][1], m[2][0], m[2][1]),
                -cof(m[0][0], m[0][1], m[2][0], m[2][1]),
                cof(m[0][0], m[0][1], m[1][0], m[1][1]),
            ],
        ];
        let inv_det = Complex64::new(1.0, 0.0) / det;
        Ok(Self::from_rows(adj).scale(inv_det))
    }
}

impl Index<(usize, usize)> for ComplexMatrix3 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl Add for ComplexMatrix3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl Sub for ComplexMatrix3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl Neg for ComplexMatrix3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_re(-1.0)
    }
}

impl Mul for ComplexMatrix3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..3 {
                    acc += self.entries[i][k] * rhs.entries[k][j];
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }
}

impl Mul<Complex64> for ComplexMatrix3 {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

/// `a† · b`.
pub fn vdot(a: &Vec3, b: &Vec3) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1] + a[2].conj() * b[2]
}

/// Unconjugated `aᵀ · b`.
pub fn vdot_t(a: &Vec3, b: &Vec3) -> Complex64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn vnorm(a: &Vec3) -> f64 {
    vdot(a, a).re.sqrt()
}

pub fn vadd(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn vsub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn vscale(z: Complex64, a: &Vec3) -> Vec3 {
    [z * a[0], z * a[1], z * a[2]]
}

/// Algebraic (unconjugated) cross product, valid over the complex field.
pub fn vcross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Relative distance of `v` from the line spanned by `u` (both nonzero).
pub fn parallel_residual(u: &Vec3, v: &Vec3) -> f64 {
    let coeff = vdot(u, v) / vdot(u, u);
    let proj = vscale(coeff, u);
    vnorm(&vsub(v, &proj)) / vnorm(v)
}

pub fn real_vec(v: [f64; 3]) -> Vec3 {
    [
        Complex64::new(v[0], 0.0),
        Complex64::new(v[1], 0.0),
        Complex64::new(v[2], 0.0),
    ]
}
