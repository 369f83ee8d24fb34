use crate::error::{Error, Result};
use crate::qform::{rep_counts, QuadraticForm};

/// `Σ_{n ≤ x} r_Q(n)²`.
pub fn mean_square_coeffs(form: &QuadraticForm, x: f64) -> Result<u128> {
    if !(x >= 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must be at least 1")));
    }
    let t = rep_counts(form, x.floor() as u64)?;
    Ok(t.as_slice().iter().map(|&r| (r as u128) * (r as u128)).sum())
}
