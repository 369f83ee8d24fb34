//! Analytic evaluation of `ζ_Q(s)`, the completed function `Λ(s)`, the real
//! critical-line function `W(t)`, `χ(s)` and the smoothed Dirichlet polynomial.

mod approx;
mod chi;
mod epstein;
pub mod gamma;
pub mod incgamma;
mod series;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qform::DEFAULT_TABLE_BUDGET;

pub use approx::{approx_critical_line, ApproxValue};
pub use chi::chi;
pub use epstein::{hardy_w, zeta_q, CompletedZetaValue, EpsteinZeta, HardyValue};
pub use series::dirichlet_series;

/// Accuracy targets and truncation policy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    /// Relative accuracy aimed for in `Λ(s)`.
    pub target_rel_err: f64,
    /// Largest number of Dirichlet coefficients a direct sum may use.
    pub max_terms: u64,
    /// Convergence tolerance of the incomplete-gamma expansions.
    pub incomplete_gamma_tol: f64,
    /// Smallest `Re s` accepted by [`dirichlet_series`].
    pub series_sigma_floor: f64,
    /// Largest `|Im s|` at which values are reported as reliable.
    pub reliable_height: f64,
    /// Contour rotation margin θ: the integration ray is turned to within
    /// `θ/|t|` of the imaginary axis, which bounds cancellation by `e^θ`.
    pub rotation_theta: f64,
    /// Iteration cap for each incomplete-gamma expansion.
    pub max_iterations: usize,
    /// Largest representation-count table that may be allocated.
    pub table_budget: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_rel_err: 1e-12,
            max_terms: 10_000_000,
            incomplete_gamma_tol: 1e-16,
            series_sigma_floor: 1.25,
            reliable_height: 3000.0,
            rotation_theta: 8.0,
            max_iterations: 200_000,
            table_budget: DEFAULT_TABLE_BUDGET,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.to_string()));
        if !(self.target_rel_err > 0.0) {
            return bad("target_rel_err must be positive");
        }
        if self.max_terms < 1 {
            return bad("max_terms must be at least 1");
        }
        if !(self.incomplete_gamma_tol > 0.0) {
            return bad("incomplete_gamma_tol must be positive");
        }
        if !(self.series_sigma_floor > 1.0) {
            return bad("series_sigma_floor must exceed 1");
        }
        if !(self.reliable_height > 0.0) {
            return bad("reliable_height must be positive");
        }
        if !(self.rotation_theta > 0.5) {
            return bad("rotation_theta must exceed 0.5");
        }
        if self.max_iterations < 10 {
            return bad("max_iterations must be at least 10");
        }
        Ok(())
    }
}
