use num_complex::Complex;

use super::{gcd, QuadraticForm};
use crate::error::{Error, Result};
use crate::scalar::{Cplx, Scalar};

/// `G_Q(k, h) = Σ_{x, y mod k} e(h Q(x, y) / k)`.
///
/// The exponent is reduced mod `k` in integer arithmetic, the residues are
/// histogrammed, and only then are `k` phases evaluated.
pub fn gauss_sum<T: Scalar>(form: &QuadraticForm, k: i64, h: i64) -> Result<Cplx<T>> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("modulus k = {k} must be >= 1")));
    }
    if gcd(h, k) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({h}, {k}) != 1")));
    }
    let kk = k as i128;
    let hh = (h as i128).rem_euclid(kk);
    let mut hist = vec![0u64; k as usize];
    for x in 0..k {
        for y in 0..k {
            let r = (hh * form.eval(x, y)).rem_euclid(kk);
            hist[r as usize] += 1;
        }
    }
    let mut acc = Complex::new(0.0f64, 0.0);
    for (r, &n) in hist.iter().enumerate() {
        if n > 0 {
            let theta = std::f64::consts::TAU * r as f64 / k as f64;
            acc += Complex::new(theta.cos(), theta.sin()) * n as f64;
        }
    }
    Ok(Complex::new(T::lit(acc.re), T::lit(acc.im)))
}
