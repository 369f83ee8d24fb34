use super::EvalConfig;
use crate::error::{Error, Result};
use crate::qform::{rep_counts_with_budget, QuadraticForm};
use crate::scalar::{cplx, Cplx, Scalar};

/// Partial sum `Σ_{n≤N} r_Q(n) n^{−s}`, with `N` chosen so that the tail bound
/// `α N^{1−σ} / (σ−1)` falls below `target_rel_err · |partial sum|`.
pub fn dirichlet_series<T: Scalar>(form: &QuadraticForm, s: Cplx<T>, config: &EvalConfig) -> Result<Cplx<T>> {
    config.validate()?;
    let sigma = s.re.to_f64_lossy();
    if !(sigma >= config.series_sigma_floor) {
        return Err(Error::Domain(format!(
            "Re s = {sigma} is below the series floor {}",
            config.series_sigma_floor
        )));
    }
    let alpha = std::f64::consts::TAU / (form.discriminant() as f64).sqrt();
    let target = config.target_rel_err.max(T::epsilon().to_f64_lossy() * 10.0);
    let terms_for = |scale: f64| -> f64 { (alpha / ((sigma - 1.0) * target * scale)).powf(1.0 / (sigma - 1.0)) };
    // The sum is at least of the size of its leading coefficient for large σ;
    // start from scale 1 and tighten once a partial sum is known.
    let mut scale = 1.0;
    let mut last_n = 0u64;
    loop {
        let n = terms_for(scale).ceil().max(1.0).max(2.0 * last_n as f64);
        if n > config.max_terms as f64 {
            return Err(Error::NonConvergence(format!(
                "direct series at s = {s} needs {n:e} terms, more than max_terms = {}",
                config.max_terms
            )));
        }
        let n = n as u64;
        let table = rep_counts_with_budget(form, n, config.table_budget)?;
        let mut acc = cplx(T::zero(), T::zero());
        // Smallest terms first.
        for (k, r) in table.nonzero().collect::<Vec<_>>().into_iter().rev() {
            let ln_k = T::from_u64(k).unwrap().ln();
            acc += (-s * ln_k).exp() * T::from_u32(r).unwrap();
        }
        let mag = acc.norm().to_f64_lossy();
        let tail = alpha * (n as f64).powf(1.0 - sigma) / (sigma - 1.0);
        if tail <= target * mag || mag <= 0.0 {
            return Ok(acc);
        }
        scale = mag * 0.5;
        last_n = n;
    }
}
