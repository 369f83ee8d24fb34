use super::gamma::{ln_cos, ln_gamma, ln_sin};
use crate::error::{Error, Result};
use crate::scalar::{real, Cplx, Scalar};

/// `χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s)`.
///
/// For `Re s > 1/2` the reflection formula turns this into
/// `2^{s−1} π^s / (cos(πs/2) Γ(s))`, so the removable singularities at even
/// `s` never appear; only `s ∈ {1, 3, 5, …}` are poles.
pub fn chi<T: Scalar>(s: Cplx<T>) -> Result<Cplx<T>> {
    let one = T::one();
    let ln2 = T::LN_2();
    let ln_pi = T::PI().ln();
    let half_pi_s = s * T::FRAC_PI_2();
    if s.re <= T::lit(0.5) {
        let l = s * ln2 + (s - one) * ln_pi + ln_gamma(real(one) - s) + ln_sin(half_pi_s);
        return Ok(l.exp());
    }
    let near_odd = {
        let m = ((s.re - one) / T::lit(2.0)).round();
        let odd = T::lit(2.0) * m + one;
        m >= T::zero() && (s - odd).norm() < T::lit(1e-6)
    };
    if near_odd {
        return Err(Error::Domain(format!("chi has a pole at s = {s}")));
    }
    let l = (s - one) * ln2 + s * ln_pi - ln_cos(half_pi_s) - ln_gamma(s);
    Ok(l.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    #[test]
    fn fixed_point_and_negative_one() {
        let c = chi(Complex64::new(0.5, 0.0)).unwrap();
        assert!((c - 1.0).norm() < 1e-14);
        let c = chi(Complex64::new(-1.0, 0.0)).unwrap();
        assert!((c.re + 1.0 / (2.0 * PI * PI)).abs() < 1e-15);
        // ζ(−1) = χ(−1) ζ(2)
        assert!((c.re * PI * PI / 6.0 + 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn even_integers_are_fine() {
        // χ(2) = 1/χ(−1) = −2π²
        let c = chi(Complex64::new(2.0, 0.0)).unwrap();
        assert!((c.re + 2.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn odd_integers_are_poles() {
        for &x in &[1.0, 3.0, 5.0 + 1e-8] {
            assert!(chi(Complex64::new(x, 0.0)).is_err());
        }
    }

    #[test]
    fn reflection_far_up() {
        let s = Complex64::new(0.3, 250.0);
        let p = chi(s).unwrap() * chi(Complex64::new(1.0, 0.0) - s).unwrap();
        assert!((p - 1.0).norm() < 1e-10);
    }
}
