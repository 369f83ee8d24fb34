//! Machinery around the gap bound: smoothing, oscillatory integrals, power
//! means, rational approximation and the transformation phases.

mod coeffs;
mod diophantine;
pub mod oscillatory;
mod phase;
mod power_mean;
pub mod quad;
mod smoothing;

pub use coeffs::mean_square_coeffs;
pub use diophantine::{c1_constant, c2_constant, cf_approx, convergents, mod_inverse, RationalApprox};
pub use oscillatory::{oscillatory_bound_check, Hypothesis, OscillatoryCheck, OscillatoryProblem};
pub use phase::{n_j_values, phase_deriv_f, phase_f, phi, phi_deriv, transform_amplitude};
pub use power_mean::first_power_mean;
pub use quad::{QuadConfig, QuadResult};
pub use smoothing::{
    eta_weight, gaussian_window_integrals, make_smoothing, smoothed_integrals, smoothstep, SmoothedIntegrals,
    SmoothingParams,
};
