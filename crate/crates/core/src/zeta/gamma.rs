//! Complex log-gamma and log-trigonometric helpers.

use crate::scalar::{cplx, real, Cplx, Scalar};

/// Bernoulli numbers B₂ … B₂₀ as (numerator, denominator).
const BERNOULLI: [(f64, f64); 10] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
];

/// Below this modulus the argument is shifted upward before using Stirling.
const SHIFT_RADIUS: f64 = 10.0;

/// `ln Γ(z)` for complex `z` off the non-positive integers.
///
/// The imaginary part is correct only modulo 2π; callers exponentiate it.
/// Uses recurrence to `Re z ≥ 0, |z| ≥ 10`, then the Stirling series to `B₂₀`.
pub fn ln_gamma<T: Scalar>(z: Cplx<T>) -> Cplx<T> {
    let one = T::one();
    let radius = T::lit(SHIFT_RADIUS);
    let mut z = z;
    let mut shift = Cplx::new(T::zero(), T::zero());
    let mut prod = real(one);
    let mut n = 0;
    while z.re < T::zero() || z.norm() < radius {
        prod *= z;
        z.re += one;
        n += 1;
        // Re-normalise the running product into a log every few steps.
        if n % 8 == 0 {
            shift += prod.ln();
            prod = real(one);
        }
    }
    shift += prod.ln();
    stirling(z) - shift
}

fn stirling<T: Scalar>(z: Cplx<T>) -> Cplx<T> {
    let half = T::lit(0.5);
    let ln_sqrt_2pi = T::lit(0.918_938_533_204_672_8);
    let mut out = (z - half) * z.ln() - z + ln_sqrt_2pi;
    let w = z.inv();
    let w2 = w * w;
    let mut pow = w;
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let k2 = 2.0 * (k as f64 + 1.0);
        out += pow * T::lit(num / (den * k2 * (k2 - 1.0)));
        pow *= w2;
    }
    out
}

/// `ln sin w` that stays finite for large `|Im w|`.
pub fn ln_sin<T: Scalar>(w: Cplx<T>) -> Cplx<T> {
    let i = cplx(T::zero(), T::one());
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    if w.im.abs() < T::lit(20.0) {
        w.sin().ln()
    } else if w.im > T::zero() {
        // sin w = (i/2) e^{−iw} (1 − e^{2iw})
        -i * w + ((real(T::one()) - (i * w * two).exp()) * i * half).ln()
    } else {
        // sin w = (−i/2) e^{iw} (1 − e^{−2iw})
        i * w + ((real(T::one()) - (-i * w * two).exp()) * (-i) * half).ln()
    }
}

/// `ln cos w` that stays finite for large `|Im w|`.
pub fn ln_cos<T: Scalar>(w: Cplx<T>) -> Cplx<T> {
    let i = cplx(T::zero(), T::one());
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    if w.im.abs() < T::lit(20.0) {
        w.cos().ln()
    } else if w.im > T::zero() {
        -i * w + ((real(T::one()) + (i * w * two).exp()) * half).ln()
    } else {
        i * w + ((real(T::one()) + (-i * w * two).exp()) * half).ln()
    }
}
