//! Smoothing parameters, the Gaussian-weighted integrals of `W`, and the bump `η`.

use serde::Serialize;

use super::quad::{integrate, uniform_points, QuadConfig};
use crate::error::{Error, Result};
use crate::qform::QuadraticForm;
use crate::scalar::{cplx, Cplx, Scalar};
use crate::zeros::refine_bracket;
use crate::zeta::EpsteinZeta;

/// The parameter bundle `(T, V, ε, L, G, Y)` with `L = 8 (log T)^{1/2}`,
/// `G = V/L` and `VY = T^{1+ε}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct SmoothingParams<T> {
    pub T: T,
    pub V: T,
    pub eps: T,
    pub L: T,
    pub G: T,
    pub Y: T,
}

/// Builds the bundle; requires `T ≥ 100`, `ε > 0` and `T^ε ≤ V ≤ T^{1/2 − ε}`.
#[allow(non_snake_case)]
pub fn make_smoothing<T: Scalar>(T_: T, V: T, eps: T) -> Result<SmoothingParams<T>> {
    if !(T_ >= T::lit(100.0)) {
        return Err(Error::InvalidArgument(format!("T = {T_} must be at least 100")));
    }
    if !(eps > T::zero() && eps < T::lit(0.25)) {
        return Err(Error::InvalidArgument(format!("eps = {eps} must lie in (0, 1/4)")));
    }
    let lo = T_.powf(eps);
    let hi = T_.powf(T::lit(0.5) - eps);
    if !(V >= lo && V <= hi) {
        return Err(Error::InvalidArgument(format!("V = {V} outside [T^eps, T^(1/2-eps)] = [{lo}, {hi}]")));
    }
    let L = T::lit(8.0) * T_.ln().sqrt();
    let G = V / L;
    let Y = T_.powf(T::one() + eps) / V;
    Ok(SmoothingParams { T: T_, V, eps, L, G, Y })
}

impl<T: Scalar> SmoothingParams<T> {
    /// `P(u) = u √Δ / (2π)`.
    pub fn p_of(&self, form: &QuadraticForm, u: T) -> T {
        u * T::from_int(form.discriminant()).sqrt() / T::TAU()
    }
}

/// `I₁ = ∫|W(u)| e^{−(t−u)²/G²} du` and `I₂ = ∫ f(1/2+iu) e^{−(t−u)²/G²} du`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmoothedIntegrals<T> {
    pub i1: T,
    pub i2: Cplx<T>,
    /// Sign changes of `W` inside the window.
    pub zeros: Vec<T>,
}

/// The integrals over `[t − V/4, t + V/4]` with Gaussian width `G`.
pub fn smoothed_integrals<T: Scalar>(
    ev: &EpsteinZeta<T>,
    t: T,
    p: &SmoothingParams<T>,
    cfg: &QuadConfig,
) -> Result<SmoothedIntegrals<T>> {
    gaussian_window_integrals(ev, t, p.V / T::lit(4.0), p.G, cfg)
}

/// The integrals over `[t − half_width, t + half_width]` with Gaussian width `g`.
///
/// Sign changes of `W` are located first and used as break points, so `|W|`
/// is smooth on every panel; panels are no wider than `min(1, g)`.
pub fn gaussian_window_integrals<T: Scalar>(
    ev: &EpsteinZeta<T>,
    t: T,
    half_width: T,
    g: T,
    cfg: &QuadConfig,
) -> Result<SmoothedIntegrals<T>> {
    if !(half_width > T::zero() && g > T::zero()) {
        return Err(Error::InvalidArgument("window half-width and Gaussian width must be positive".into()));
    }
    let (lo, hi) = (t - half_width, t + half_width);
    let k = ev.form().stark_k::<T>();
    let mean_step = T::lit(0.2) / (k * t.abs()).ln().max(T::one());
    let grid = uniform_points(lo, hi, mean_step.min(g * T::lit(0.5)));
    let ws: Vec<T> = ev.hardy_w_many(&grid)?.into_iter().map(|h| h.w).collect();
    let tol = T::epsilon() * hi.abs().max(T::one()) * T::lit(8.0);
    let mut zeros = Vec::new();
    for i in 0..grid.len() - 1 {
        if (ws[i] < T::zero()) != (ws[i + 1] < T::zero()) {
            let f = |u: T| ev.hardy_w(u).map(|h| h.w);
            let (z, _) = refine_bracket(f, grid[i], ws[i], grid[i + 1], ws[i + 1], tol)?;
            zeros.push(z.t);
        }
    }
    let panel = g.min(T::one());
    let mut points = vec![lo];
    for &z in zeros.iter().chain(std::iter::once(&hi)) {
        let start = *points.last().unwrap();
        if z > start {
            points.extend(uniform_points(start, z, panel).into_iter().skip(1));
        }
    }
    let inv_g2 = (g * g).recip();
    let r = integrate(
        |u: T| {
            let h = ev.hardy_w(u)?;
            let wt = (-(t - u) * (t - u) * inv_g2).exp();
            Ok([h.w.abs() * wt, h.w * wt, h.imag * wt])
        },
        &points,
        cfg,
    )?;
    Ok(SmoothedIntegrals { i1: r.value[0], i2: cplx(r.value[1], r.value[2]), zeros })
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Smoothstep of order `2J − 1`: `S_J(u) = u^J Σ_{k<J} C(J−1+k, k) (1−u)^k`.
///
/// `S_J(0) = 0`, `S_J(1) = 1`, the first `J − 1` derivatives vanish at both
/// ends, and `S_J(u) + S_J(1−u) = 1`.
pub fn smoothstep<T: Scalar>(u: T, j: u32) -> T {
    if u <= T::zero() {
        return T::zero();
    }
    if u >= T::one() {
        return T::one();
    }
    let v = T::one() - u;
    let mut sum = T::zero();
    let mut vk = T::one();
    for k in 0..j {
        sum += T::lit(binomial(j - 1 + k, k)) * vk;
        vk *= v;
    }
    u.powi(j as i32) * sum
}

/// `η(x)`: 1 on `[c − Y, c + Y]`, 0 outside `[c − 2Y, c + 2Y]`, `C^{J−1}` smoothsteps between.
pub fn eta_weight<T: Scalar>(x: T, center: T, y: T, j: u32) -> Result<T> {
    if !(y > T::zero()) || j < 2 {
        return Err(Error::InvalidArgument(format!("eta needs Y > 0 and J >= 2, got Y = {y}, J = {j}")));
    }
    let d = (x - center).abs();
    Ok(if d <= y {
        T::one()
    } else if d >= y + y {
        T::zero()
    } else {
        smoothstep((y + y - d) / y, j)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_parameters() {
        let p = make_smoothing(1e4f64, 10.0, 0.1).unwrap();
        assert_eq!(p.L, 8.0 * (1e4f64).ln().sqrt());
        assert_eq!(p.G, p.V / p.L);
        assert!((p.Y - 10f64.powf(4.4) / 10.0).abs() < 1e-9 * p.Y);
        assert!((p.V * p.Y - p.T.powf(1.0 + p.eps)).abs() <= 1e-12 * p.V * p.Y);
    }

    #[test]
    fn window_is_enforced() {
        assert!(make_smoothing(1e4f64, 1e4f64.powf(0.6), 0.1).is_err());
        assert!(make_smoothing(1e4f64, 10.0, 0.0).is_err());
        assert!(make_smoothing(50.0f64, 3.0, 0.1).is_err());
        assert!(make_smoothing(1e4f64, 1.5, 0.1).is_err());
    }

    #[test]
    fn eta_shape() {
        let (c, y) = (5.0f64, 2.0);
        assert_eq!(eta_weight(c, c, y, 3).unwrap(), 1.0);
        assert_eq!(eta_weight(c + 2.0 * y, c, y, 3).unwrap(), 0.0);
        assert_eq!(eta_weight(c - 2.0 * y, c, y, 3).unwrap(), 0.0);
        assert!((eta_weight(c - 1.5 * y, c, y, 2).unwrap() - 0.5).abs() < 1e-15);
        assert!((eta_weight(c + 1.5 * y, c, y, 5).unwrap() - 0.5).abs() < 1e-15);
        assert!(eta_weight(c, c, 0.0, 3).is_err());
        assert!(eta_weight(c, c, y, 1).is_err());
    }

    #[test]
    fn smoothstep_is_odd_symmetric() {
        for j in 2..7 {
            for i in 0..=20 {
                let u = i as f64 / 20.0;
                assert!((smoothstep(u, j) + smoothstep(1.0 - u, j) - 1.0).abs() < 1e-14);
            }
        }
    }
}
