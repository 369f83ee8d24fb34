//! ζ, Dirichlet β, log-gamma and Hardy-type functions.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Lanczos `ln Γ(z)`, with reflection for `Re z < 1/2`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Normalised Borwein weights `w_k`, `k < n`, for alternating series.
fn borwein_weights(n: usize) -> Vec<f64> {
    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!); w_k = (d_n − d_k) / d_n.
    let lf = |m: usize| -> f64 { (1..=m).map(|j| (j as f64).ln()).sum() };
    let logs: Vec<f64> = (0..=n)
        .map(|i| lf(n + i - 1) + i as f64 * 4f64.ln() - lf(n - i) - lf(2 * i))
        .collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let a: Vec<f64> = logs.iter().map(|l| (l - top).exp()).collect();
    let total: f64 = a.iter().sum();
    let mut w = vec![0.0; n];
    let mut suffix = 0.0;
    for k in (0..n).rev() {
        suffix += a[k + 1];
        w[k] = suffix / total;
    }
    w
}

fn terms_needed(s: Complex64) -> usize {
    let t = s.im.abs();
    let base = (3.0 + 8f64.sqrt()).ln();
    (((40.0 + PI * t / 2.0 + (2.0 + 2.0 * t).ln()) / base) + 10.0 + 6.0 * (-s.re).max(0.0)) as usize
}

fn accelerated(s: Complex64, node: impl Fn(usize) -> f64) -> Complex64 {
    let n = terms_needed(s);
    let w = borwein_weights(n);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        let term = (-s * node(k).ln()).exp() * w[k];
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Dirichlet eta `η(s) = Σ (−1)^k (k+1)^{−s}`.
pub fn eta(s: Complex64) -> Complex64 {
    accelerated(s, |k| (k + 1) as f64)
}

/// Riemann zeta via `ζ(s) = η(s) / (1 − 2^{1−s})`.
pub fn zeta(s: Complex64) -> Complex64 {
    eta(s) / (1.0 - (Complex64::new(2f64.ln(), 0.0) * (1.0 - s)).exp())
}

/// Dirichlet beta `β(s) = Σ (−1)^k (2k+1)^{−s}`.
pub fn beta(s: Complex64) -> Complex64 {
    accelerated(s, |k| (2 * k + 1) as f64)
}

/// `ζ_Q` for `Q = x² + y²`: `4 ζ(s) β(s)`.
pub fn two_squares_zeta(s: Complex64) -> Complex64 {
    4.0 * zeta(s) * beta(s)
}

/// Riemann–Siegel theta `Im ln Γ(1/4 + it/2) − (t/2) ln π`.
pub fn theta_zeta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, t / 2.0)).im - t / 2.0 * PI.ln()
}

/// Analogue for β: `Im ln Γ(3/4 + it/2) + (t/2) ln(4/π)`.
pub fn theta_beta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.75, t / 2.0)).im + t / 2.0 * (4.0 / PI).ln()
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real.
pub fn hardy_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, theta_zeta(t)) * zeta(Complex64::new(0.5, t))).re
}

/// `e^{iθ_β(t)} β(1/2 + it)`, real.
pub fn hardy_z_beta(t: f64) -> f64 {
    (Complex64::from_polar(1.0, theta_beta(t)) * beta(Complex64::new(0.5, t))).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        let z2 = zeta(Complex64::new(2.0, 0.0));
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-13);
        let b1 = beta(Complex64::new(1.0, 0.0));
        assert!((b1.re - PI / 4.0).abs() < 1e-13);
        let b2 = beta(Complex64::new(2.0, 0.0));
        assert!((b2.re - 0.915_965_594_177_219).abs() < 1e-13);
        let zm1 = zeta(Complex64::new(-1.0, 0.0));
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-12);
        let z3 = zeta(Complex64::new(3.0, 0.0));
        assert!((z3.re - 1.202_056_903_159_594).abs() < 1e-13);
    }

    #[test]
    fn first_zeros() {
        assert!(zeta(Complex64::new(0.5, 14.134_725_141_734_693)).norm() < 1e-10);
        assert!(hardy_z(14.0) * hardy_z(14.3) < 0.0);
        assert!(hardy_z_beta(6.0) * hardy_z_beta(6.05) < 0.0);
    }

    #[test]
    fn hardy_functions_are_real() {
        for &t in &[3.0, 77.7, 400.0] {
            let z = Complex64::from_polar(1.0, theta_zeta(t)) * zeta(Complex64::new(0.5, t));
            let b = Complex64::from_polar(1.0, theta_beta(t)) * beta(Complex64::new(0.5, t));
            assert!(z.im.abs() < 1e-9 && b.im.abs() < 1e-9, "t = {t}: {z} {b}");
        }
    }

    #[test]
    fn lanczos_against_factorials() {
        assert!((ln_gamma(Complex64::new(6.0, 0.0)).re - 120f64.ln()).abs() < 1e-13);
        assert!((ln_gamma(Complex64::new(0.5, 0.0)).re - PI.sqrt().ln()).abs() < 1e-13);
    }
}
