use super::{isqrt, QuadraticForm};
use crate::error::{Error, Result};

/// Reduced forms of discriminant `−Δ`: `|b| ≤ a ≤ c`, with `b ≥ 0` when `|b| = a` or `a = c`.
///
/// Non-primitive forms are included.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadraticForm>> {
    if disc < 3 || !matches!(disc.rem_euclid(4), 0 | 3) {
        return Err(Error::InvalidArgument(format!(
            "discriminant {disc} must be >= 3 and congruent to 0 or 3 mod 4"
        )));
    }
    let mut out = Vec::new();
    // 3a² ≤ 4ac − b² = Δ for reduced forms.
    let a_max = isqrt(disc / 3);
    for a in 1..=a_max {
        for b in -a..=a {
            let num = disc + b * b;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            out.push(QuadraticForm::new(a, b, c)?);
        }
    }
    Ok(out)
}

/// Number of reduced forms of discriminant `−Δ`.
pub fn count_classes(disc: i64) -> Result<usize> {
    reduced_forms(disc).map(|v| v.len())
}
