//! Phase functions of the Voronoi-type transformation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `φ(x) = arcsinh(√x) + √(x + x²)`.
pub fn phi<T: Scalar>(x: T) -> Result<T> {
    if !(x >= T::zero()) {
        return Err(Error::Domain(format!("phi needs x >= 0, got {x}")));
    }
    Ok(x.sqrt().asinh() + (x + x * x).sqrt())
}

/// `φ'(x) = √((1 + x)/x)` for `x > 0`.
pub fn phi_deriv<T: Scalar>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("phi' needs x > 0, got {x}")));
    }
    Ok(((T::one() + x) / x).sqrt())
}

fn check_positive<T: Scalar>(c2: T, m: T, n: T, x: T) -> Result<()> {
    if !(c2 > T::zero() && m > T::zero() && n > T::zero() && x > T::zero()) {
        return Err(Error::Domain(format!("need C2, m, n, x > 0, got {c2}, {m}, {n}, {x}")));
    }
    Ok(())
}

/// `F(x) = 2x (φ(C₂m/x) − φ(C₂n/x))`.
pub fn phase_f<T: Scalar>(c2: T, m: T, n: T, x: T) -> Result<T> {
    check_positive(c2, m, n, x)?;
    let two = T::lit(2.0);
    Ok(two * x * (phi(c2 * m / x)? - phi(c2 * n / x)?))
}

/// `F'(x) = 2 arcsinh(√(C₂m/x)) − 2 arcsinh(√(C₂n/x))`.
///
/// Differentiating `2x φ(c/x)` gives `2φ(y) − 2yφ'(y)` with `y = c/x`, and the
/// `√(y(1+y))` parts of the two terms cancel.
pub fn phase_deriv_f<T: Scalar>(c2: T, m: T, n: T, x: T) -> Result<T> {
    check_positive(c2, m, n, x)?;
    let two = T::lit(2.0);
    Ok(two * ((c2 * m / x).sqrt().asinh() - (c2 * n / x).sqrt().asinh()))
}

/// `G(x) = ((1 + C₂m/x)(1 + C₂n/x))^{−1/4}`.
pub fn transform_amplitude<T: Scalar>(c2: T, m: T, n: T, x: T) -> Result<T> {
    check_positive(c2, m, n, x)?;
    let p = (T::one() + c2 * m / x) * (T::one() + c2 * n / x);
    Ok(p.powf(T::lit(-0.25)))
}

/// `n_j = Δ₀ h² m_j² / M_j` for `j = 1, 2`.
///
/// `Δ₀` is a caller-supplied convention (commonly `Δ` itself).
pub fn n_j_values<T: Scalar>(delta0: T, h: u64, m1: T, m2: T, big_m1: T, big_m2: T) -> Result<(T, T)> {
    let hh = T::from_u64(h).unwrap();
    if !(delta0 > T::zero() && h > 0 && m1 > T::zero() && m2 > T::zero() && big_m1 > T::zero() && big_m2 > T::zero()) {
        return Err(Error::InvalidArgument("n_j needs positive arguments".into()));
    }
    let f = |m: T, big: T| delta0 * hh * hh * m * m / big;
    Ok((f(m1, big_m1), f(m2, big_m2)))
}
