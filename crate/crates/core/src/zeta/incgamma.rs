//! `E(s, z) = ∫₁^∞ e^{−zu} u^{s−1} du = z^{−s} Γ(s, z)` for complex `s` and `Re z > 0`.

use super::gamma::ln_gamma;
use crate::error::{Error, Result};
use crate::scalar::{real, Cplx, Scalar};

/// Value of `E(s, z)` with an absolute rounding-error estimate.
#[derive(Debug, Clone, Copy)]
pub struct IncGamma<T> {
    pub value: Cplx<T>,
    pub err: T,
    pub iterations: usize,
}

/// Which expansion evaluated `E(s, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Expansion about `s = 0`: small `|s|` and `|z|`.
    NearZero,
    /// Continued fraction: `|z|` comparable to or larger than `|s|`.
    ContinuedFraction,
    /// Power series behind `z^{−s} Γ(s)`: `|z|` well below `|s|`.
    Series,
}

/// Chooses the expansion for `(s, z)`.
pub fn method<T: Scalar>(s: Cplx<T>, z: Cplx<T>) -> Method {
    let zs = z.norm();
    let ss = s.norm();
    // Both power expansions carry 1/(s + k) factors; the fraction does not.
    let near_neg_int = s.re < T::lit(-0.5)
        && (s.re - s.re.round()).abs() < T::lit(0.25)
        && s.im.abs() < T::lit(0.25);
    if near_neg_int {
        Method::ContinuedFraction
    } else if zs < T::lit(1.5) && ss < T::lit(3.0) {
        Method::NearZero
    } else if zs >= T::lit(0.975) * ss {
        Method::ContinuedFraction
    } else {
        Method::Series
    }
}

/// Evaluates `E(s, z)`. `tol` is the relative convergence tolerance of the expansions.
pub fn upper_e<T: Scalar>(s: Cplx<T>, z: Cplx<T>, tol: T, max_iter: usize) -> Result<IncGamma<T>> {
    if !(z.re > T::zero()) {
        return Err(Error::Domain(format!("E(s, z) needs Re z > 0, got z = {z}")));
    }
    let tol = tol.max(T::epsilon());
    match method(s, z) {
        Method::NearZero => near_zero(s, z, tol, max_iter),
        Method::ContinuedFraction => continued_fraction(s, z, tol, max_iter),
        Method::Series => series(s, z, tol, max_iter),
    }
}

/// Modified Lentz evaluation of
/// `E = e^{−z} / (z+1−s − 1(1−s)/(z+3−s − 2(2−s)/(z+5−s − …)))`.
///
/// A single small update can occur by coincidence before convergence, so
/// three consecutive converged updates are required.
fn continued_fraction<T: Scalar>(s: Cplx<T>, z: Cplx<T>, tol: T, max_iter: usize) -> Result<IncGamma<T>> {
    let tiny = T::min_positive_value() / T::epsilon();
    let guard = |v: Cplx<T>| if v.norm_sqr() == T::zero() { real(tiny) } else { v };
    let one = real(T::one());
    let two = T::lit(2.0);
    let mut b = z + T::one() - s;
    let mut c = real(T::one() / tiny);
    let mut d = guard(b).inv();
    let mut h = d;
    let mut hits = 0;
    for i in 1..max_iter {
        let fi = T::from_usize(i).unwrap();
        let an = -(real(fi) - s) * fi;
        b += two;
        d = guard(an * d + b).inv();
        c = guard(b + an / c);
        let delta = d * c;
        h *= delta;
        if (delta - one).norm() < tol {
            hits += 1;
            if hits >= 3 {
                let value = (-z).exp() * h;
                let err = value.norm() * T::epsilon() * T::lit(4.0) * fi.sqrt().max(T::one());
                return Ok(IncGamma { value, err, iterations: i });
            }
        } else {
            hits = 0;
        }
    }
    Err(Error::NonConvergence(format!("continued fraction for E({s}, {z}) after {max_iter} terms")))
}

/// `E = z^{−s} Γ(s) − e^{−z} Σ_{k≥0} z^k / (s)_{k+1}`.
fn series<T: Scalar>(s: Cplx<T>, z: Cplx<T>, tol: T, max_iter: usize) -> Result<IncGamma<T>> {
    let mut term = s.inv();
    let mut sum = term;
    let mut peak = term.norm();
    let zn = z.norm();
    for k in 1..max_iter {
        let sk = s + T::from_usize(k).unwrap();
        term = term * z / sk;
        sum += term;
        let tn = term.norm();
        peak = peak.max(tn);
        if tn < tol * sum.norm() && zn < sk.norm() {
            let head = (ln_gamma(s) - s * z.ln()).exp();
            let ez = (-z).exp();
            let value = head - ez * sum;
            let scale = head.norm() + ez.norm() * peak;
            let err = scale * T::epsilon() * T::lit(8.0);
            return Ok(IncGamma { value, err, iterations: k });
        }
    }
    Err(Error::NonConvergence(format!("power series for E({s}, {z}) after {max_iter} terms")))
}

/// `E = (z^{−s} Γ(1+s) − 1)/s − Σ_{k≥1} (−z)^k / (k! (s+k))`, finite at `s = 0`.
fn near_zero<T: Scalar>(s: Cplx<T>, z: Cplx<T>, tol: T, max_iter: usize) -> Result<IncGamma<T>> {
    let mut term = real(T::one());
    let mut sum = Cplx::new(T::zero(), T::zero());
    let mut mag = T::zero();
    let mut done = false;
    let mut iters = 0;
    for k in 1..max_iter {
        let fk = T::from_usize(k).unwrap();
        term = -term * z / fk;
        let add = term / (s + fk);
        sum += add;
        mag += add.norm();
        iters = k;
        if term.norm() < tol * sum.norm().max(T::one()) {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::NonConvergence(format!("near-zero series for E({s}, {z})")));
    }
    let lead = if s.norm() == T::zero() {
        // d/ds [ln Γ(1+s) − s ln z] at s = 0
        -z.ln() - T::lit(0.577_215_664_901_532_9)
    } else {
        let x = ln_gamma(s + T::one()) - s * z.ln();
        expm1(x) / s
    };
    let value = lead - sum;
    let err = (lead.norm() + mag + T::one()) * T::epsilon() * T::lit(16.0);
    Ok(IncGamma { value, err, iterations: iters })
}

fn expm1<T: Scalar>(x: Cplx<T>) -> Cplx<T> {
    if x.norm() > T::lit(1e-5) {
        x.exp() - T::one()
    } else {
        let (two, three, four) = (T::lit(2.0), T::lit(3.0), T::lit(4.0));
        x * (real(T::one()) + x / two * (real(T::one()) + x / three * (real(T::one()) + x / four)))
    }
}
