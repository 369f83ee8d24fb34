use serde::Serialize;

use super::EvalConfig;
use crate::error::{Error, Result};
use crate::qform::{rep_counts_with_budget, QuadraticForm};
use crate::scalar::{cplx, Cplx, Scalar};

/// Smoothed Dirichlet polynomial for `ζ_Q(1/2 + it)` and its error scale `t X^{−1/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxValue<T> {
    pub value: Cplx<T>,
    pub error_scale: T,
}

/// `Σ_{n≤X} r(n) n^{−s} + Σ_{X<n≤2X} r(n) n^{−s} log(2X/n)/log 2
///  − α((2X)^{1−s} − X^{1−s}) / ((1−s)² log 2)` at `s = 1/2 + it`, `α = 2π/√Δ`.
///
/// The last term is the integral of `α x^{−s}` against the same weight, i.e.
/// the smoothed contribution of the pole, which has to be removed.
pub fn approx_critical_line<T: Scalar>(
    form: &QuadraticForm,
    t: T,
    x: T,
    config: &EvalConfig,
) -> Result<ApproxValue<T>> {
    if !(t >= T::lit(2.0)) {
        return Err(Error::InvalidArgument(format!("t = {t} must be at least 2")));
    }
    if !(x >= t * t) {
        return Err(Error::InvalidArgument(format!("X = {x} must be at least t² = {}", t * t)));
    }
    let two_x = T::lit(2.0) * x;
    let n_top = two_x.floor().to_f64_lossy();
    if n_top > config.max_terms as f64 || n_top > config.table_budget as f64 {
        return Err(Error::Resource(format!("2X = {two_x} exceeds the coefficient budget")));
    }
    let table = rep_counts_with_budget(form, n_top as u64, config.table_budget)?;
    let s = cplx(T::lit(0.5), t);
    let ln2 = T::LN_2();
    let ln_2x = two_x.ln();
    let mut acc = cplx(T::zero(), T::zero());
    for (n, r) in table.nonzero() {
        let nt = T::from_u64(n).unwrap();
        let ln_n = nt.ln();
        let mut term = (-s * ln_n).exp() * T::from_u32(r).unwrap();
        if nt > x {
            term *= (ln_2x - ln_n) / ln2 ;
        }
        acc += term;
    }
    let alpha = T::TAU() / T::from_int(form.discriminant()).sqrt();
    let w = cplx(T::one(), T::zero()) - s;
    let pole = ((w * ln_2x).exp() - (w * x.ln()).exp()) / (w * w) * (alpha / ln2);
    Ok(ApproxValue { value: acc - pole, error_scale: t / x.sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preconditions() {
        let f = QuadraticForm::new(1, 1, 1).unwrap();
        let cfg = EvalConfig::default();
        assert!(approx_critical_line(&f, 2.0f64, 4.0, &cfg).unwrap().value.re.is_finite());
        assert!(approx_critical_line(&f, 2.0f64, 3.9, &cfg).is_err());
        assert!(approx_critical_line(&f, 1.5f64, 10.0, &cfg).is_err());
        let small = EvalConfig { max_terms: 100, ..EvalConfig::default() };
        assert!(matches!(approx_critical_line(&f, 10.0f64, 100.0, &small), Err(Error::Resource(_))));
    }
}
