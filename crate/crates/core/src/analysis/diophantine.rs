//! Continued-fraction approximation of `√Δ` and modular helpers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qform::{is_square, isqrt};

/// Convergent `k/h` of `√Δ` with `err = |√Δ − k/h|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RationalApprox {
    pub h: u128,
    pub k: u128,
    pub err: f64,
}

impl RationalApprox {
    /// `err · h²`, which lies in `(0, 1]` for convergents.
    pub fn scaled_err(&self) -> f64 {
        self.err * (self.h as f64) * (self.h as f64)
    }

    pub fn is_reduced(&self) -> bool {
        let (mut a, mut b) = (self.h, self.k);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a == 1
    }
}

/// The first `count` convergents of `√Δ` (fewer if 128-bit numerators overflow).
///
/// Uses the exact surd recurrence `m' = da − m`, `d' = (Δ − m'²)/d`,
/// `a' = ⌊(a₀ + m')/d'⌋`.
pub fn convergents(disc: i64, count: usize) -> Result<Vec<RationalApprox>> {
    if disc < 1 || is_square(disc) {
        return Err(Error::InvalidArgument(format!("discriminant {disc} is a perfect square or not positive")));
    }
    let a0 = isqrt(disc) as i128;
    let d128 = disc as i128;
    let (mut m, mut d, mut a) = (0i128, 1i128, a0);
    let (mut p_prev, mut p) = (1i128, a0);
    let (mut q_prev, mut q) = (0i128, 1i128);
    let mut out = Vec::with_capacity(count);
    let sqrt_d = (disc as f64).sqrt();
    while out.len() < count {
        m = d * a - m;
        d = (d128 - m * m) / d;
        // p² − Δq² = ±d for the next surd denominator d, so |√Δ − p/q| = d / (q (q√Δ + p)).
        let err = d as f64 / (q as f64 * (q as f64 * sqrt_d + p as f64));
        out.push(RationalApprox { h: q as u128, k: p as u128, err });
        a = (a0 + m) / d;
        let next_p = a.checked_mul(p).and_then(|v| v.checked_add(p_prev));
        let next_q = a.checked_mul(q).and_then(|v| v.checked_add(q_prev));
        match (next_p, next_q) {
            (Some(np), Some(nq)) => {
                (p_prev, p) = (p, np);
                (q_prev, q) = (q, nq);
            }
            _ => break,
        }
    }
    Ok(out)
}

/// The convergent whose denominator is closest to `h_target` (later one on ties).
pub fn cf_approx(disc: i64, h_target: f64) -> Result<RationalApprox> {
    if !(h_target >= 1.0) {
        return Err(Error::InvalidArgument(format!("h_target = {h_target} must be at least 1")));
    }
    let all = convergents(disc, 200)?;
    let mut best = all[0];
    for c in all {
        if (c.h as f64 - h_target).abs() <= (best.h as f64 - h_target).abs() {
            best = c;
        }
        if c.h as f64 > 2.0 * h_target + 2.0 {
            break;
        }
    }
    Ok(best)
}

/// Inverse of `a` modulo `m ≥ 1`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m < 1 {
        return None;
    }
    let (mut r0, mut r1) = (a.rem_euclid(m) as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as i64)
}

/// `C₁ = h̄ Δ̄₀ / k − 1/(2hkΔ₀)` with `h̄`, `Δ̄₀` inverses modulo `k`.
pub fn c1_constant(h: i64, k: i64, delta0: i64) -> Result<f64> {
    let hb = mod_inverse(h, k).ok_or_else(|| Error::InvalidArgument(format!("{h} has no inverse mod {k}")))?;
    let db = mod_inverse(delta0, k).ok_or_else(|| Error::InvalidArgument(format!("{delta0} has no inverse mod {k}")))?;
    Ok((hb * db) as f64 / k as f64 - 1.0 / (2.0 * h as f64 * k as f64 * delta0 as f64))
}

/// `C₂ = π / (2hkΔ₀)`.
pub fn c2_constant(h: i64, k: i64, delta0: f64) -> f64 {
    std::f64::consts::PI / (2.0 * h as f64 * k as f64 * delta0)
}
