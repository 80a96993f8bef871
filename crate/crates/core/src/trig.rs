//! Scalar spectral functions evaluated on Jordan blocks.
//!
//! With `x = lambda * (omega0*t)^2`, the propagator entries reduce to the
//! entire functions
//!
//! ```text
//! cosc(x) = cos(sqrt(x))            sinc(x) = sin(sqrt(x))/sqrt(x)
//! havc(x) = (1 - cos(sqrt(x)))/x
//! ```
//!
//! and their first derivatives, which supply the off-diagonal entries of a
//! defective block. All of them are even in `sqrt(x)`, so no branch choice
//! leaks into the values. Near `x = 0` the closed forms lose digits to
//! cancellation and Taylor series are used instead.

use num_complex::Complex64;

use crate::tolerances::TAU_SINC;

/// Window inside which the derivative functions use their Taylor series.
/// The closed forms `(cosc - sinc)/(2x)` and `(sinc/2 - havc)/x` cancel
/// catastrophically well before `TAU_SINC`.
const DERIV_SERIES_WINDOW: f64 = 0.5;

/// `cos(sqrt(x))`.
pub fn cosc(x: Complex64) -> Complex64 {
    if x.norm() < TAU_SINC {
        let one = Complex64::new(1.0, 0.0);
        one - x / 2.0 + x * x / 24.0 - x * x * x / 720.0
    } else {
        x.sqrt().cos()
    }
}

/// `sin(sqrt(x))/sqrt(x)`.
pub fn sinc(x: Complex64) -> Complex64 {
    if x.norm() < TAU_SINC {
        let one = Complex64::new(1.0, 0.0);
        one - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0
    } else {
        let s = x.sqrt();
        s.sin() / s
    }
}

/// `(1 - cos(sqrt(x)))/x`, evaluated through the half-angle identity
/// `1 - cos(s) = 2 sin^2(s/2)` which is cancellation-free.
pub fn havc(x: Complex64) -> Complex64 {
    if x.norm() < TAU_SINC {
        Complex64::new(0.5, 0.0) - x / 24.0 + x * x / 720.0 - x * x * x / 40320.0
    } else {
        let half = x.sqrt() * 0.5;
        let s = half.sin();
        2.0 * s * s / x
    }
}

/// `d/dx cosc(x) = -sinc(x)/2`.
pub fn dcosc(x: Complex64) -> Complex64 {
    -sinc(x) * 0.5
}

/// `d/dx sinc(x)`.
pub fn dsinc(x: Complex64) -> Complex64 {
    if x.norm() < DERIV_SERIES_WINDOW {
        // sum_{n>=1} (-1)^n n x^(n-1) / (2n+1)!
        let mut coeff = Complex64::new(-1.0 / 6.0, 0.0); // n = 1 term
        let mut power = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 1..=16u32 {
            let term = coeff * power * (n as f64);
            sum += term;
            if term.norm() < 1e-20 {
                break;
            }
            coeff /= -(((2 * n + 2) * (2 * n + 3)) as f64);
            power *= x;
        }
        sum
    } else {
        (cosc(x) - sinc(x)) / (2.0 * x)
    }
}

/// `d/dx havc(x)`.
pub fn dhavc(x: Complex64) -> Complex64 {
    if x.norm() < DERIV_SERIES_WINDOW {
        // sum_{n>=1} (-1)^n n x^(n-1) / (2n+2)!
        let mut coeff = Complex64::new(-1.0 / 24.0, 0.0); // n = 1 term
        let mut power = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 1..=16u32 {
            let term = coeff * power * (n as f64);
            sum += term;
            if term.norm() < 1e-20 {
                break;
            }
            coeff /= -(((2 * n + 3) * (2 * n + 4)) as f64);
            power *= x;
        }
        sum
    } else {
        (sinc(x) * 0.5 - havc(x)) / x
    }
}
