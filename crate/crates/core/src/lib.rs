//! Epstein zeta functions of positive-definite binary quadratic forms.
//!
//! The numerical core is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases at the crate root fix it to double precision.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod qform;
pub mod scalar;
pub mod verify;
pub mod zeta;
pub mod zeros;

pub use error::{Error, Result};
pub use qform::{QuadraticForm, RepCountTable};
pub use scalar::{Cplx, Scalar};
pub use zeta::EvalConfig;

/// Double-precision complex number.
pub type Complex64 = num_complex::Complex<f64>;
/// Double-precision evaluator.
pub type Epstein = zeta::EpsteinZeta<f64>;
/// Single-precision evaluator.
pub type Epstein32 = zeta::EpsteinZeta<f32>;
