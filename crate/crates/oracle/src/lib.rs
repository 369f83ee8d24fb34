//! Reference implementations used only to check `epstein-core`.
//!
//! Nothing here shares code with the library: ζ and β come from
//! Borwein-accelerated alternating series, log-gamma from a Lanczos
//! approximation, and the arithmetic functions from brute-force loops.

pub mod arith;
pub mod special;

pub use num_complex::Complex64;

/// Central difference `(f(x+h) − f(x−h)) / 2h`.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Five-point central difference, fourth-order accurate.
pub fn central_diff5(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// Sign changes of `f` on a uniform grid of step `h` over `[a, b]`, each
/// bisected to width `tol`.
pub fn sign_change_roots(f: impl Fn(f64) -> f64, a: f64, b: f64, h: f64, tol: f64) -> Vec<f64> {
    let n = ((b - a) / h).ceil() as usize;
    let mut out = Vec::new();
    let mut x0 = a;
    let mut f0 = f(x0);
    for i in 1..=n {
        let x1 = (a + i as f64 * h).min(b);
        let f1 = f(x1);
        if f0 == 0.0 {
            out.push(x0);
        } else if f0 * f1 < 0.0 {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm * flo > 0.0 {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    out
}
