use rayon::prelude::*;
use serde::Serialize;

use super::gamma::ln_gamma;
use super::incgamma::upper_e;
use super::EvalConfig;
use crate::error::{Error, Result};
use crate::qform::{rep_counts_with_budget, QuadraticForm};
use crate::scalar::{cplx, real, Cplx, Scalar};

/// `Λ(s) = (√Δ/2π)^s Γ(s) ζ_Q(s)` together with `ζ_Q(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompletedZetaValue<T> {
    pub s: Cplx<T>,
    pub lambda: Cplx<T>,
    pub zeta: Cplx<T>,
    /// Absolute error estimate for `lambda`.
    pub est_err: T,
}

impl<T: Scalar> CompletedZetaValue<T> {
    /// Absolute error estimate for `zeta`, scaled from `est_err`.
    pub fn zeta_err(&self) -> T {
        let l = self.lambda.norm();
        if l > T::zero() {
            self.est_err * self.zeta.norm() / l
        } else {
            T::infinity()
        }
    }
}

/// `f(1/2 + it) = e^{πt/2} Λ(1/2 + it)`, real in exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HardyValue<T> {
    pub t: T,
    /// `W(t) = Re f(1/2 + it)`.
    pub w: T,
    /// `Im f(1/2 + it)`, zero up to rounding.
    pub imag: T,
    /// `|Im f(1/2 + it)|`.
    pub imag_residual: T,
    pub est_err: T,
}

/// Evaluator for one form, holding its representation counts.
///
/// Uses `Λ(s) = δ^s [Σ r(n) E(s, αnδ) + δ⁻¹ Σ r(n) E(1−s, αn/δ) + δ⁻¹/(s−1) − 1/s]`
/// with `α = 2π/√Δ` and `δ = e^{iφ}`. Any `|φ| < π/2` is valid; `φ = 0` is the
/// classical theta-function formula. For large `|t|` the ray is turned towards
/// the imaginary axis so that the bracket is of the size of `Λ` times `e^{π|t|/2}`
/// rather than a cancelling sum of far larger terms.
#[derive(Debug, Clone)]
pub struct EpsteinZeta<T: Scalar> {
    form: QuadraticForm,
    config: EvalConfig,
    alpha: T,
    ln_q: T,
    /// `(r(n), αn)` for the represented `n ≤ cap`.
    terms: Vec<(T, T)>,
    cap: u64,
}

struct Bracket<T> {
    phi: T,
    value: Cplx<T>,
    err: T,
}

impl<T: Scalar> EpsteinZeta<T> {
    pub fn new(form: QuadraticForm, config: EvalConfig) -> Result<Self> {
        config.validate()?;
        let disc = T::from_int(form.discriminant());
        let alpha = T::TAU() / disc.sqrt();
        let ln_q = (disc.sqrt() / T::TAU()).ln();
        let mut me = Self { form, config, alpha, ln_q, terms: Vec::new(), cap: 0 };
        let probe = cplx(T::lit(3.0), T::lit(me.config.reliable_height));
        let cap = me.needed_n(probe).min(me.config.table_budget).max(1);
        let table = rep_counts_with_budget(&form, cap, me.config.table_budget)?;
        me.terms = table
            .nonzero()
            .map(|(n, r)| (T::from_u32(r).unwrap(), alpha * T::from_u64(n).unwrap()))
            .collect();
        me.cap = cap;
        Ok(me)
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn config(&self) -> &EvalConfig {
        &self.config
    }

    /// `2π/√Δ`, the residue of `ζ_Q` at `s = 1`.
    pub fn residue(&self) -> T {
        self.alpha
    }

    /// Largest coefficient index available without rebuilding.
    pub fn table_limit(&self) -> u64 {
        self.cap
    }

    fn rel_target(&self) -> T {
        T::lit(self.config.target_rel_err).max(T::epsilon() * T::lit(10.0))
    }

    /// Rotation angle for height `t`.
    fn rotation(&self, t: T) -> T {
        let theta = T::lit(self.config.rotation_theta);
        let phi = (T::FRAC_PI_2() - theta / t.abs()).max(T::zero());
        if t < T::zero() {
            -phi
        } else {
            phi
        }
    }

    /// Absolute truncation tolerance on the bracket.
    fn abs_tol(&self) -> T {
        self.rel_target() * (-T::lit(self.config.rotation_theta)).exp() * T::lit(0.1)
    }

    /// Number of coefficients needed at `s`.
    fn needed_n(&self, s: Cplx<T>) -> u64 {
        let phi = self.rotation(s.im);
        let theta = T::lit(self.config.rotation_theta);
        // cos φ, written to keep precision when φ is close to π/2.
        let cos_phi = if phi == T::zero() { T::one() } else { (theta / s.im.abs()).sin() };
        let c = self.alpha * cos_phi;
        let l = -self.abs_tol().ln();
        let n0 = l / c;
        // The coefficient sum grows like αN, which the tail bound must absorb.
        let extra = (self.alpha / (c * c * n0.max(T::one()))).ln().max(T::zero());
        let n_decay = (l + extra) / c;
        let n_saddle = T::lit(1.2) * s.norm() / self.alpha;
        let n = n_decay.max(n_saddle).ceil() + T::one();
        n.to_f64_lossy().min(u64::MAX as f64 / 2.0) as u64
    }

    fn check_s(&self, s: Cplx<T>) -> Result<()> {
        let pole_tol = T::lit(1e-9);
        if s.norm() < pole_tol || (s - T::one()).norm() < pole_tol {
            return Err(Error::Pole(format!("{s}")));
        }
        if !(s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite argument {s}")));
        }
        if s.im.abs().to_f64_lossy() > self.config.reliable_height {
            return Err(Error::PrecisionLoss(format!(
                "|Im s| = {} exceeds reliable height {}",
                s.im.abs(),
                self.config.reliable_height
            )));
        }
        Ok(())
    }

    fn bracket(&self, s: Cplx<T>) -> Result<Bracket<T>> {
        let n_max = self.needed_n(s);
        if n_max > self.cap {
            return Err(Error::Resource(format!(
                "needs {n_max} coefficients at s = {s}, table holds {}",
                self.cap
            )));
        }
        let phi = self.rotation(s.im);
        let delta = Cplx::from_polar(T::one(), phi);
        let delta_inv = delta.conj();
        let s_dual = real(T::one()) - s;
        let tol = T::lit(self.config.incomplete_gamma_tol);
        let iters = self.config.max_iterations;
        let cut = self.alpha * T::from_u64(n_max).unwrap();
        let zero = cplx(T::zero(), T::zero());
        let (mut s1, mut s2) = (zero, zero);
        let (mut err, mut mag) = (T::zero(), T::zero());
        for &(r, an) in self.terms.iter().take_while(|&&(_, an)| an <= cut) {
            let e1 = upper_e(s, delta * an, tol, iters)?;
            let e2 = upper_e(s_dual, delta_inv * an, tol, iters)?;
            s1 += e1.value * r;
            s2 += e2.value * r;
            err += r * (e1.err + e2.err);
            mag += r * (e1.value.norm() + e2.value.norm());
        }
        let value = s1 + delta_inv * s2 + delta_inv / (s - T::one()) - s.inv();
        let err = err + mag * T::epsilon() * T::lit(4.0) + self.abs_tol();
        Ok(Bracket { phi, value, err })
    }

    /// `Λ(s)` and `ζ_Q(s)`.
    pub fn zeta_q(&self, s: Cplx<T>) -> Result<CompletedZetaValue<T>> {
        self.check_s(s)?;
        let b = self.bracket(s)?;
        let i_phi_s = cplx(T::zero(), b.phi) * s;
        let rot = i_phi_s.exp();
        let lambda = rot * b.value;
        let zeta = (i_phi_s - s * self.ln_q - ln_gamma(s)).exp() * b.value;
        Ok(CompletedZetaValue { s, lambda, zeta, est_err: rot.norm() * b.err })
    }

    /// `W(t) = e^{πt/2} Λ(1/2 + it)` and its imaginary residual.
    pub fn hardy_w(&self, t: T) -> Result<HardyValue<T>> {
        let half = T::lit(0.5);
        let s = cplx(half, t);
        self.check_s(s)?;
        let b = self.bracket(s)?;
        let scale = cplx((T::FRAC_PI_2() - b.phi) * t, b.phi * half).exp();
        let f = scale * b.value;
        Ok(HardyValue { t, w: f.re, imag: f.im, imag_residual: f.im.abs(), est_err: scale.norm() * b.err })
    }

    /// `W` at many ordinates, evaluated in parallel; order is preserved.
    pub fn hardy_w_many(&self, ts: &[T]) -> Result<Vec<HardyValue<T>>> {
        ts.par_iter().map(|&t| self.hardy_w(t)).collect()
    }
}

/// One-shot `ζ_Q(s)`; builds an evaluator, so prefer [`EpsteinZeta`] for repeated use.
pub fn zeta_q<T: Scalar>(form: &QuadraticForm, s: Cplx<T>, config: &EvalConfig) -> Result<CompletedZetaValue<T>> {
    EpsteinZeta::new(*form, config.clone())?.zeta_q(s)
}

/// One-shot `W(t)`.
pub fn hardy_w<T: Scalar>(form: &QuadraticForm, t: T, config: &EvalConfig) -> Result<HardyValue<T>> {
    EpsteinZeta::new(*form, config.clone())?.hardy_w(t)
}
