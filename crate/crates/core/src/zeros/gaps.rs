use serde::Serialize;

use super::ZeroRecord;
use crate::error::{Error, Result};
use crate::qform::QuadraticForm;
use crate::scalar::Scalar;

/// Zeros on `[0, T]` and their consecutive gaps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapTable<T> {
    form: QuadraticForm,
    t_max: T,
    zeros: Vec<ZeroRecord<T>>,
    gaps: Vec<T>,
}

impl<T: Scalar> GapTable<T> {
    /// Keeps the zeros with `0 ≤ t ≤ t_max`; they must be strictly increasing.
    pub fn new(form: QuadraticForm, t_max: T, zeros: Vec<ZeroRecord<T>>) -> Result<Self> {
        let zeros: Vec<_> = zeros.into_iter().filter(|z| z.t >= T::zero() && z.t <= t_max).collect();
        let gaps: Vec<T> = zeros.windows(2).map(|w| w[1].t - w[0].t).collect();
        if let Some(i) = gaps.iter().position(|&g| !(g > T::zero())) {
            return Err(Error::InvalidArgument(format!(
                "zeros not strictly increasing at {} -> {}",
                zeros[i].t,
                zeros[i + 1].t
            )));
        }
        Ok(Self { form, t_max, zeros, gaps })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn t_max(&self) -> T {
        self.t_max
    }

    pub fn zeros(&self) -> &[ZeroRecord<T>] {
        &self.zeros
    }

    pub fn gaps(&self) -> &[T] {
        &self.gaps
    }

    pub fn max_gap(&self) -> Option<T> {
        self.gaps.iter().cloned().reduce(T::max)
    }

    /// `R(V) = #{i : g_i ≥ V}`.
    pub fn count_at_least(&self, v: T) -> Result<usize> {
        if !(v > T::zero()) {
            return Err(Error::InvalidArgument(format!("V = {v} must be positive")));
        }
        Ok(self.gaps.iter().filter(|&&g| g >= v).count())
    }
}

/// Free-function form of [`GapTable::count_at_least`].
pub fn gap_stats<T: Scalar>(table: &GapTable<T>, v: T) -> Result<usize> {
    table.count_at_least(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zr(t: f64) -> ZeroRecord<f64> {
        ZeroRecord { t, bracket: 1e-10, sign_left: 1, sign_right: -1 }
    }

    fn form() -> QuadraticForm {
        QuadraticForm::new(1, 0, 1).unwrap()
    }

    #[test]
    fn empty_and_small_tables() {
        let t = GapTable::new(form(), 10.0, vec![]).unwrap();
        assert_eq!(gap_stats(&t, 1.0).unwrap(), 0);
        let t = GapTable::new(form(), 10.0, vec![zr(1.0), zr(2.5), zr(3.0), zr(7.0), zr(11.0)]).unwrap();
        assert_eq!(t.zeros().len(), 4);
        assert_eq!(gap_stats(&t, 0.5).unwrap(), 3);
        assert_eq!(gap_stats(&t, 1.5).unwrap(), 2);
        assert_eq!(gap_stats(&t, 4.0).unwrap(), 1);
        assert_eq!(gap_stats(&t, 4.01).unwrap(), 0);
        assert!(gap_stats(&t, 0.0).is_err());
    }

    #[test]
    fn unsorted_input_is_rejected() {
        assert!(GapTable::new(form(), 10.0, vec![zr(2.0), zr(1.0)]).is_err());
        assert!(GapTable::new(form(), 10.0, vec![zr(2.0), zr(2.0)]).is_err());
    }
}
