use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stark::{stark_error_weight, stark_prediction};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zeta::EpsteinZeta;

/// A refined sign change of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord<T> {
    pub t: T,
    /// Half-width of the final bracket.
    pub bracket: T,
    pub sign_left: i8,
    pub sign_right: i8,
}

/// Grid and refinement policy for [`scan_zeros`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ScanConfig {
    /// Grid step is `step_base / max(1, log(k t))`.
    pub step_base: f64,
    /// Target half-width of each zero's bracket.
    pub refine_tol: f64,
    /// Search local minima of `|W|` without a sign change for a hidden pair of zeros.
    pub dip_search: bool,
    /// Multiple of `h(T+3)` tolerated between the count and the main term before warning.
    pub stark_band: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { step_base: 0.2, refine_tol: 1e-9, dip_search: true, stark_band: 25.0 }
    }
}

/// Result of a scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanOutcome<T> {
    pub zeros: Vec<ZeroRecord<T>>,
    /// Number of `W` evaluations used.
    pub evaluations: usize,
    /// Expected count on the range from the main term, when `t1 ≥ 3`.
    pub stark_expected: Option<f64>,
    /// Count-check and other non-fatal diagnostics.
    pub warnings: Vec<String>,
}

fn sign<T: Scalar>(x: T) -> i8 {
    if x > T::zero() {
        1
    } else if x < T::zero() {
        -1
    } else {
        0
    }
}

/// Locates the sign changes of `W` on `[t0, t1]`.
///
/// `W` is sampled on a grid in parallel; every sign change is refined to a
/// bracket of half-width `refine_tol`. A grid value that is exactly zero is
/// moved by half a step. Only odd-order zeros are visible.
pub fn scan_zeros<T: Scalar>(ev: &EpsteinZeta<T>, t0: T, t1: T, cfg: &ScanConfig) -> Result<ScanOutcome<T>> {
    if !(t0 >= T::zero()) || !(t1 >= t0) {
        return Err(Error::InvalidArgument(format!("scan range [{t0}, {t1}] must satisfy 0 <= t0 <= t1")));
    }
    let height = ev.config().reliable_height;
    if t1.to_f64_lossy() > height {
        return Err(Error::PrecisionLoss(format!("scan end {t1} exceeds reliable height {height}")));
    }
    if !(cfg.step_base > 0.0) || !(cfg.refine_tol > 0.0) {
        return Err(Error::InvalidArgument("step_base and refine_tol must be positive".into()));
    }
    let mut out = ScanOutcome { zeros: Vec::new(), evaluations: 0, stark_expected: None, warnings: Vec::new() };
    if t1 == t0 {
        return Ok(out);
    }
    let k = ev.form().stark_k::<f64>();
    let step = |t: f64| cfg.step_base / (k * t).ln().max(1.0);

    let (a, b) = (t0.to_f64_lossy(), t1.to_f64_lossy());
    let mut grid = vec![a];
    let mut t = a;
    while t < b {
        t = (t + step(t)).min(b);
        grid.push(t);
    }
    let mut ts: Vec<T> = grid.iter().map(|&x| T::lit(x)).collect();
    let mut ws: Vec<T> = ev.hardy_w_many(&ts)?.into_iter().map(|h| h.w).collect();
    out.evaluations += ts.len();

    for i in 0..ts.len() {
        if ws[i] == T::zero() {
            let h = T::lit(0.5 * step(grid[i]));
            let moved = if i + 1 < ts.len() { ts[i] + h } else { ts[i] - h };
            ts[i] = moved;
            ws[i] = ev.hardy_w(moved)?.w;
            out.evaluations += 1;
        }
    }

    let mut brackets: Vec<(T, T, T, T)> = Vec::new();
    for i in 0..ts.len() - 1 {
        if sign(ws[i]) * sign(ws[i + 1]) < 0 {
            brackets.push((ts[i], ws[i], ts[i + 1], ws[i + 1]));
        }
    }
    if cfg.dip_search {
        let dips: Vec<usize> = (1..ts.len().saturating_sub(1))
            .filter(|&i| {
                let s = sign(ws[i]);
                s == sign(ws[i - 1]) && s == sign(ws[i + 1]) && ws[i].abs() < ws[i - 1].abs() && ws[i].abs() < ws[i + 1].abs()
            })
            .collect();
        let found: Vec<Option<(T, T, usize)>> = dips
            .par_iter()
            .map(|&i| probe_dip(ev, ts[i - 1], ts[i + 1], sign(ws[i]), T::lit(cfg.refine_tol)))
            .collect::<Result<_>>()?;
        for (&i, f) in dips.iter().zip(found) {
            if let Some((tm, wm, evals)) = f {
                out.evaluations += evals;
                brackets.push((ts[i - 1], ws[i - 1], tm, wm));
                brackets.push((tm, wm, ts[i + 1], ws[i + 1]));
            }
        }
    }

    let tol = T::lit(cfg.refine_tol);
    let refined: Vec<(ZeroRecord<T>, usize)> = brackets
        .par_iter()
        .map(|&(a, fa, b, fb)| refine_bracket(|t| ev.hardy_w(t).map(|h| h.w), a, fa, b, fb, tol))
        .collect::<Result<_>>()?;
    for (z, evals) in refined {
        out.evaluations += evals;
        out.zeros.push(z);
    }
    out.zeros.sort_by(|p, q| p.t.partial_cmp(&q.t).unwrap());

    if b >= 3.0 {
        let hi = stark_prediction(ev.form(), b)?.main;
        let lo = if a >= 3.0 { stark_prediction(ev.form(), a)?.main } else { 0.0 };
        let expected = hi - lo.max(0.0);
        out.stark_expected = Some(expected);
        let band = cfg.stark_band * stark_error_weight(b + 3.0);
        let dev = out.zeros.len() as f64 - expected;
        if dev.abs() > band {
            out.warnings.push(format!(
                "zero count {} deviates from main term {expected:.2} by {dev:.2}, outside band {band:.2}",
                out.zeros.len()
            ));
        }
    }
    Ok(out)
}

/// Golden-section search of `sign·W` on `[a, b]` for a point of opposite sign.
fn probe_dip<T: Scalar>(ev: &EpsteinZeta<T>, a: T, b: T, s: i8, tol: T) -> Result<Option<(T, T, usize)>> {
    let g = T::lit(0.618_033_988_749_894_8);
    let signed = |w: T| if s > 0 { w } else { -w };
    let (mut a, mut b) = (a, b);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = ev.hardy_w(c)?.w;
    let mut fd = ev.hardy_w(d)?.w;
    let mut evals = 2;
    let floor = tol.max(T::epsilon() * b.abs() * T::lit(16.0));
    loop {
        if signed(fc) < T::zero() {
            return Ok(Some((c, fc, evals)));
        }
        if signed(fd) < T::zero() {
            return Ok(Some((d, fd, evals)));
        }
        if b - a < floor || evals > 80 {
            return Ok(None);
        }
        if signed(fc) < signed(fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = ev.hardy_w(c)?.w;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = ev.hardy_w(d)?.w;
        }
        evals += 1;
    }
}

/// Shrinks a sign-change bracket `[a, b]` of `f` to half-width `tol`.
///
/// Illinois (modified regula falsi) steps, with a bisection step whenever the
/// bracket has not halved over three iterations. Also returns the number of
/// evaluations.
pub fn refine_bracket<T: Scalar>(
    f: impl Fn(T) -> Result<T>,
    a: T,
    fa: T,
    b: T,
    fb: T,
    tol: T,
) -> Result<(ZeroRecord<T>, usize)> {
    let (sl, sr) = (sign(fa), sign(fb));
    debug_assert!(sl * sr < 0);
    let (mut a, mut fa, mut b, mut fb) = (a, fa, b, fb);
    let half = T::lit(0.5);
    let mut side = 0i8;
    let mut evals = 0;
    let mut width_before = b - a;
    let mut since_check = 0;
    let mut force_bisect = false;
    while (b - a) * half > tol {
        let mid = (a + b) * half;
        if mid <= a || mid >= b {
            break; // adjacent floating-point numbers
        }
        let mut c = if force_bisect { mid } else { b - fb * (b - a) / (fb - fa) };
        if !(c > a && c < b) {
            c = mid;
        }
        force_bisect = false;
        let fc = f(c)?;
        evals += 1;
        if fc == T::zero() {
            return Ok((ZeroRecord { t: c, bracket: T::zero(), sign_left: sl, sign_right: sr }, evals));
        }
        if sign(fc) == sign(fa) {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= half;
            }
            side = -1;
        } else {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= half;
            }
            side = 1;
        }
        since_check += 1;
        if since_check == 3 {
            if b - a > width_before * half {
                force_bisect = true;
            }
            width_before = b - a;
            since_check = 0;
        }
        if evals > 400 {
            return Err(Error::NonConvergence(format!("zero refinement in [{a}, {b}]")));
        }
    }
    Ok((ZeroRecord { t: (a + b) * half, bracket: (b - a) * half, sign_left: sl, sign_right: sr }, evals))
}
