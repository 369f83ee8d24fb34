use serde::Serialize;

use crate::error::{Error, Result};
use crate::qform::QuadraticForm;
use crate::scalar::{real, Scalar};
use crate::zeta::EpsteinZeta;

/// Main term of the zero count `N(T, Q)` and the error weight `h(T + 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarkEstimate {
    pub main: f64,
    pub error_scale: f64,
}

/// `h(x) = (log x)^{1/3} (log log x)^{1/6}` for `x > e`.
pub fn stark_error_weight(x: f64) -> f64 {
    let l = x.ln();
    l.cbrt() * l.ln().max(0.0).powf(1.0 / 6.0)
}

/// `(T/π) log(kT/(πe))` with `k = √Δ/(2a)`.
pub fn stark_prediction(form: &QuadraticForm, t: f64) -> Result<StarkEstimate> {
    if !(t >= 3.0) {
        return Err(Error::InvalidArgument(format!("T = {t} must be at least 3")));
    }
    let k = form.stark_k::<f64>();
    let pi = std::f64::consts::PI;
    let main = t / pi * (k * t / (pi * std::f64::consts::E)).ln();
    Ok(StarkEstimate { main, error_scale: stark_error_weight(t + 3.0) })
}

/// A zero of `ζ_Q` on the real segment `(1/2, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealZero<T> {
    pub sigma: T,
    /// `ζ_Q(sigma)`, zero up to the bisection resolution.
    pub value: T,
}

const SIGMA_GRID: usize = 400;

/// First sign change of `ζ_Q(σ)` on `(1/2, 1)`, bisected to the limit of the
/// floating-point grid (well below `1e−9`).
pub fn real_zero_in_unit_interval<T: Scalar>(ev: &EpsteinZeta<T>) -> Result<Option<RealZero<T>>> {
    let f = |x: T| ev.zeta_q(real(x)).map(|v| v.zeta.re);
    let half = T::lit(0.5);
    let top = T::one() - T::lit(1e-6);
    let step = (top - half) / T::from_usize(SIGMA_GRID).unwrap();
    let mut a = half;
    let mut fa = f(a)?;
    for j in 1..=SIGMA_GRID {
        let b = if j == SIGMA_GRID { top } else { half + step * T::from_usize(j).unwrap() };
        let fb = f(b)?;
        if fa == T::zero() {
            return Ok(Some(RealZero { sigma: a, value: fa }));
        }
        if (fa < T::zero()) != (fb < T::zero()) {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            loop {
                let mid = (lo + hi) * half;
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f(mid)?;
                if fm == T::zero() {
                    return Ok(Some(RealZero { sigma: mid, value: fm }));
                }
                if (fm < T::zero()) == (flo < T::zero()) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let sigma = (lo + hi) * half;
            return Ok(Some(RealZero { sigma, value: f(sigma)? }));
        }
        a = b;
        fa = fb;
    }
    Ok(None)
}
