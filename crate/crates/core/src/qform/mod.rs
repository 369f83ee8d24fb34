//! Positive-definite binary quadratic forms `Q(x, y) = a x² + b xy + c y²`.

mod classes;
mod gauss;
mod reps;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use classes::{count_classes, reduced_forms};
pub use gauss::gauss_sum;
pub use reps::{rep_counts, rep_counts_with_budget, RepCountTable, DEFAULT_TABLE_BUDGET};

/// An integral binary quadratic form with `a ≥ 1` and `4ac − b² ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct QuadraticForm {
    a: i64,
    b: i64,
    c: i64,
}

/// Coefficients are capped so that `4ac` and the lattice enumeration fit in `i64`.
const COEFF_LIMIT: i64 = 1 << 30;

impl QuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if [a, b, c].iter().any(|v| v.abs() > COEFF_LIMIT) {
            return Err(Error::InvalidArgument(format!(
                "coefficients of ({a},{b},{c}) exceed {COEFF_LIMIT} in magnitude"
            )));
        }
        if a < 1 || 4 * a * c - b * b < 1 {
            return Err(Error::NotPositiveDefinite(format!("({a},{b},{c})")));
        }
        Ok(Self { a, b, c })
    }

    #[inline]
    pub fn a(&self) -> i64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> i64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> i64 {
        self.c
    }

    /// `Δ = 4ac − b²`.
    #[inline]
    pub fn discriminant(&self) -> i64 {
        4 * self.a * self.c - self.b * self.b
    }

    /// Whether `Δ` is a perfect square.
    pub fn square_disc(&self) -> bool {
        is_square(self.discriminant())
    }

    /// `Q(x, y)` in exact arithmetic.
    #[inline]
    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// The equivalent form `Q(y, −x) = (c, −b, a)`.
    pub fn adjoint(&self) -> Self {
        Self { a: self.c, b: -self.b, c: self.a }
    }

    /// Stark's parameter `k = √Δ / (2a)`.
    pub fn stark_k<T: Scalar>(&self) -> T {
        T::from_int(self.discriminant()).sqrt() / T::from_int(2 * self.a)
    }
}

/// Free-function form of [`QuadraticForm::discriminant`].
pub fn discriminant(form: &QuadraticForm) -> i64 {
    form.discriminant()
}

/// Free-function form of [`QuadraticForm::stark_k`].
pub fn stark_k<T: Scalar>(form: &QuadraticForm) -> T {
    form.stark_k()
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for QuadraticForm {
    type Err = Error;

    /// Parses `"a,b,c"` (surrounding parentheses and spaces are tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected a,b,c but got {s:?}")));
        }
        let mut v = [0i64; 3];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {p:?} in {s:?}")))?;
        }
        Self::new(v[0], v[1], v[2])
    }
}

impl TryFrom<[i64; 3]> for QuadraticForm {
    type Error = Error;

    fn try_from(v: [i64; 3]) -> Result<Self> {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<QuadraticForm> for [i64; 3] {
    fn from(q: QuadraticForm) -> Self {
        [q.a, q.b, q.c]
    }
}

/// Floor of the square root of a non-negative integer.
pub(crate) fn isqrt(n: i64) -> i64 {
    debug_assert!(n >= 0);
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub(crate) fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = isqrt(n);
        r * r == n
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
