//! Wavevectors and the Fourier-basis curl matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{real_vec, ComplexMatrix3, Vec3};

/// Real wavevector with its derived angular frequency `omega0 = c * |k|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveVector {
    k: [f64; 3],
    norm: f64,
    omega0: f64,
    c: f64,
}

impl WaveVector {
    /// Rejects the zero wavevector and non-positive wave speeds.
    pub fn new(k1: f64, k2: f64, k3: f64, c: f64) -> Result<Self> {
        if c <= 0.0 {
            return Err(Error::NonPositiveSpeed(c));
        }
        let norm = (k1 * k1 + k2 * k2 + k3 * k3).sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroWaveVector);
        }
        Ok(Self {
            k: [k1, k2, k3],
            norm,
            omega0: c * norm,
            c,
        })
    }

    pub fn components(&self) -> [f64; 3] {
        self.k
    }

    pub fn k1(&self) -> f64 {
        self.k[0]
    }

    pub fn k2(&self) -> f64 {
        self.k[1]
    }

    pub fn k3(&self) -> f64 {
        self.k[2]
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn speed(&self) -> f64 {
        self.c
    }

    pub fn unit(&self) -> [f64; 3] {
        [
            self.k[0] / self.norm,
            self.k[1] / self.norm,
            self.k[2] / self.norm,
        ]
    }

    pub fn as_complex(&self) -> Vec3 {
        real_vec(self.k)
    }

    /// True when the propagation axis is the z-axis (k1 = k2 = 0).
    pub fn is_axial(&self) -> bool {
        self.k[0].abs() <= 1e-14 * self.norm && self.k[1].abs() <= 1e-14 * self.norm
    }
}

/// Curl matrix in the Fourier basis:
/// rows `[[0, ik3, -ik2], [-ik3, 0, ik1], [ik2, -ik1, 0]]`.
///
/// Hermitian by construction, annihilates `k`, spectrum `{0, +|k|, -|k|}`.
pub fn build_curl(k: &WaveVector) -> ComplexMatrix3 {
    let i = Complex64::i();
    let z = Complex64::new(0.0, 0.0);
    let [k1, k2, k3] = k.components();
    ComplexMatrix3::from_rows([
        [z, i * k3, -i * k2],
        [-i * k3, z, i * k1],
        [i * k2, -i * k1, z],
    ])
}

/// Unit-normalized curl `build_curl(k) / |k|`, the dimensionless form used
/// inside the wave operator.
pub fn build_curl_hat(k: &WaveVector) -> ComplexMatrix3 {
    build_curl(k).scale_re(1.0 / k.norm())
}

/// Rank-one projector-like matrix `k k†` (real symmetric for real `k`).
pub fn outer_kk(k: &WaveVector) -> ComplexMatrix3 {
    let kc = k.as_complex();
    ComplexMatrix3::outer(&kc, &kc)
}
