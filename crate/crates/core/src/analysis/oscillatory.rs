//! Bounds for `∫_a^b G(x) e^{iF(x)} dx` and a small declarative family of test problems.

use serde::{Deserialize, Serialize};

use super::phase::{phase_deriv_f, phase_f, transform_amplitude};
use super::quad::{integrate, QuadConfig};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which derivative bound the caller asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// `|F'/G| ≥ m` with `G/F'` monotone; bound `4/m`.
    FirstDerivative,
    /// `|F''| ≥ m` with `G` monotone and of one sign; bound `8M/√m` for
    /// constant `G = M`, `8√2·M/√m` otherwise, `M = max|G|`.
    SecondDerivative,
}

type RealFn<'a, T> = Box<dyn Fn(T) -> T + Send + Sync + 'a>;

/// `∫_a^b G e^{iF}` together with the hypothesis the caller attests.
pub struct OscillatoryProblem<'a, T> {
    pub phase: RealFn<'a, T>,
    pub phase_deriv: RealFn<'a, T>,
    /// Needed for [`Hypothesis::SecondDerivative`].
    pub phase_second: Option<RealFn<'a, T>>,
    pub amplitude: RealFn<'a, T>,
    pub m: T,
    pub a: T,
    pub b: T,
    pub hypothesis: Hypothesis,
    /// The caller asserts the monotonicity condition of the hypothesis.
    pub monotone_attested: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatoryCheck<T> {
    pub integral_mod: T,
    pub bound: T,
    pub pass: bool,
}

const GATE_POINTS: usize = 2001;

/// Verifies the attested hypothesis on a grid, integrates with panels no
/// longer than a quarter of the local period `2π/|F'|`, and compares with the
/// bound. Fails with [`Error::HypothesisRejected`] if the gate does not pass.
pub fn oscillatory_bound_check<T: Scalar>(p: &OscillatoryProblem<'_, T>, cfg: &QuadConfig) -> Result<OscillatoryCheck<T>> {
    if !(p.m > T::zero()) || !(p.a < p.b) {
        return Err(Error::InvalidArgument(format!("need m > 0 and a < b, got m = {}, [{}, {}]", p.m, p.a, p.b)));
    }
    if !p.monotone_attested {
        return Err(Error::HypothesisRejected("monotonicity not attested".into()));
    }
    let bound = gate(p)?;
    let panels = oscillation_panels(&p.phase_deriv, p.a, p.b, cfg.max_panels)?;
    let r = integrate(
        |x: T| {
            let g = (p.amplitude)(x);
            let f = (p.phase)(x);
            Ok([g * f.cos(), g * f.sin()])
        },
        &panels,
        cfg,
    )?;
    let integral_mod = r.value[0].hypot(r.value[1]);
    Ok(OscillatoryCheck { integral_mod, bound, pass: integral_mod <= bound })
}

fn grid<T: Scalar>(a: T, b: T) -> impl Iterator<Item = T> {
    let n = T::from_usize(GATE_POINTS - 1).unwrap();
    (0..GATE_POINTS).map(move |i| a + (b - a) * T::from_usize(i).unwrap() / n)
}

fn monotone<T: Scalar>(v: &[T]) -> bool {
    let scale = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let slack = scale * T::epsilon() * T::lit(64.0);
    let up = v.windows(2).all(|w| w[1] >= w[0] - slack);
    let down = v.windows(2).all(|w| w[1] <= w[0] + slack);
    up || down
}

/// Checks the hypothesis numerically and returns the bound it implies.
fn gate<T: Scalar>(p: &OscillatoryProblem<'_, T>) -> Result<T> {
    let reject = |m: String| Err(Error::HypothesisRejected(m));
    let xs: Vec<T> = grid(p.a, p.b).collect();
    let g: Vec<T> = xs.iter().map(|&x| (p.amplitude)(x)).collect();
    match p.hypothesis {
        Hypothesis::FirstDerivative => {
            let d: Vec<T> = xs.iter().map(|&x| (p.phase_deriv)(x)).collect();
            let ratio: Vec<T> = d.iter().zip(&g).map(|(&d, &g)| d / g).collect();
            let pos = ratio.iter().all(|&r| r >= p.m);
            let neg = ratio.iter().all(|&r| r <= -p.m);
            if !(pos || neg) {
                return reject(format!("|F'/G| >= {} fails on the grid", p.m));
            }
            let inv: Vec<T> = g.iter().zip(&d).map(|(&g, &d)| g / d).collect();
            if !monotone(&inv) {
                return reject("G/F' is not monotone on the grid".into());
            }
            Ok(T::lit(4.0) / p.m)
        }
        Hypothesis::SecondDerivative => {
            let Some(f2) = p.phase_second.as_ref() else {
                return reject("second-derivative hypothesis needs F''".into());
            };
            let d2: Vec<T> = xs.iter().map(|&x| f2(x)).collect();
            if !(d2.iter().all(|&v| v >= p.m) || d2.iter().all(|&v| v <= -p.m)) {
                return reject(format!("|F''| >= {} fails on the grid", p.m));
            }
            if !(g.iter().all(|&v| v >= T::zero()) || g.iter().all(|&v| v <= T::zero())) || !monotone(&g) {
                return reject("G must be monotone and of one sign".into());
            }
            let big = g.iter().fold(T::zero(), |m, v| m.max(v.abs()));
            let small = g.iter().fold(T::infinity(), |m, v| m.min(v.abs()));
            let factor = if big - small <= big * T::epsilon() * T::lit(16.0) { T::one() } else { T::SQRT_2() };
            Ok(T::lit(8.0) * factor * big / p.m.sqrt())
        }
    }
}

/// Break points spaced by at most a quarter of the local period.
fn oscillation_panels<T: Scalar>(fd: &RealFn<'_, T>, a: T, b: T, max_panels: usize) -> Result<Vec<T>> {
    let quarter = T::FRAC_PI_2();
    let min_h = (b - a) * T::lit(1e-7);
    let max_h = (b - a) / T::lit(4.0);
    let mut pts = vec![a];
    let mut x = a;
    while x < b {
        let mut h = max_h;
        for _ in 0..3 {
            let w = fd(x).abs().max(fd((x + h).min(b)).abs());
            h = if w > T::zero() { (quarter / w).min(max_h) } else { max_h };
        }
        x = (x + h.max(min_h)).min(b);
        pts.push(x);
        if pts.len() > max_panels {
            return Err(Error::Quadrature(format!("more than {max_panels} oscillation panels on [{a}, {b}]")));
        }
    }
    Ok(pts)
}

/// Phase families used by the verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PhaseKind {
    /// `F = γ x²`, `G = 1`.
    Quadratic { gamma: f64 },
    /// `F = γ x³`, `G = 1`.
    Cubic { gamma: f64 },
    /// `F = 2x(φ(C₂m/x) − φ(C₂n/x))`, `G = ((1 + C₂m/x)(1 + C₂n/x))^{−1/4}`.
    Transform { c2: f64, m: f64, n: f64 },
}

/// One family member: a phase on an interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyCase {
    pub phase: PhaseKind,
    pub a: f64,
    pub b: f64,
}

impl FamilyCase {
    /// Problem certified by the first-derivative hypothesis.
    ///
    /// Requires `0 < a` (no stationary point) and, for the transform phase,
    /// `m > n`. `m` is the minimum of `F'/G`, attained at an endpoint.
    pub fn problem(&self) -> Result<OscillatoryProblem<'static, f64>> {
        if !(self.a > 0.0 && self.b > self.a) {
            return Err(Error::InvalidArgument(format!("family interval [{}, {}] must satisfy 0 < a < b", self.a, self.b)));
        }
        let (a, b) = (self.a, self.b);
        let one: RealFn<'static, f64> = Box::new(|_| 1.0);
        let p = match self.phase {
            PhaseKind::Quadratic { gamma } => OscillatoryProblem {
                phase: Box::new(move |x| gamma * x * x),
                phase_deriv: Box::new(move |x| 2.0 * gamma * x),
                phase_second: Some(Box::new(move |_| 2.0 * gamma)),
                amplitude: one,
                m: 2.0 * gamma * a,
                a,
                b,
                hypothesis: Hypothesis::FirstDerivative,
                monotone_attested: true,
            },
            PhaseKind::Cubic { gamma } => OscillatoryProblem {
                phase: Box::new(move |x| gamma * x * x * x),
                phase_deriv: Box::new(move |x| 3.0 * gamma * x * x),
                phase_second: Some(Box::new(move |x| 6.0 * gamma * x)),
                amplitude: one,
                m: 3.0 * gamma * a * a,
                a,
                b,
                hypothesis: Hypothesis::FirstDerivative,
                monotone_attested: true,
            },
            PhaseKind::Transform { c2, m, n } => {
                if !(m > n && n > 0.0 && c2 > 0.0) {
                    return Err(Error::InvalidArgument("transform phase needs m > n > 0 and C2 > 0".into()));
                }
                // F' decreases and G increases in x, so F'/G is smallest at b.
                let m_eff = phase_deriv_f(c2, m, n, b)? / transform_amplitude(c2, m, n, b)?;
                OscillatoryProblem {
                    phase: Box::new(move |x| phase_f(c2, m, n, x).unwrap_or(f64::NAN)),
                    phase_deriv: Box::new(move |x| phase_deriv_f(c2, m, n, x).unwrap_or(f64::NAN)),
                    phase_second: None,
                    amplitude: Box::new(move |x| transform_amplitude(c2, m, n, x).unwrap_or(f64::NAN)),
                    m: m_eff,
                    a,
                    b,
                    hypothesis: Hypothesis::FirstDerivative,
                    monotone_attested: true,
                }
            }
        };
        Ok(p)
    }
}

/// The standard 30-case family: ten quadratic, ten cubic and ten transform phases.
pub fn standard_family() -> Vec<FamilyCase> {
    let mut out = Vec::new();
    for &gamma in &[0.5, 1.0, 2.0, 5.0, 10.0] {
        for &(a, b) in &[(1.0, 10.0), (0.5, 3.0)] {
            out.push(FamilyCase { phase: PhaseKind::Quadratic { gamma }, a, b });
        }
    }
    for &gamma in &[0.1, 0.5, 1.0, 2.0, 4.0] {
        for &(a, b) in &[(1.0, 4.0), (0.3, 2.0)] {
            out.push(FamilyCase { phase: PhaseKind::Cubic { gamma }, a, b });
        }
    }
    for &c2 in &[0.05, 0.5] {
        for &(m, n) in &[(2.0, 1.0), (4.0, 1.0), (9.0, 4.0), (3.0, 2.0), (16.0, 1.0)] {
            out.push(FamilyCase { phase: PhaseKind::Transform { c2, m, n }, a: 100.0, b: 200.0 });
        }
    }
    out
}

/// Parses a family description, one case per line:
///
/// ```text
/// # comment
/// quadratic gamma=2 a=1 b=10
/// cubic gamma=0.5 a=1 b=4
/// transform c2=0.5 m=4 n=1 a=100 b=200
/// ```
pub fn parse_family(text: &str) -> Result<Vec<FamilyCase>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let kind = words.next().unwrap();
        let mut kv = std::collections::BTreeMap::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value, got {w:?}", lineno + 1)))?;
            let v: f64 = v
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad number {v:?}", lineno + 1)))?;
            kv.insert(k.to_string(), v);
        }
        let get = |k: &str| -> Result<f64> {
            kv.get(k).copied().ok_or_else(|| Error::Parse(format!("line {}: missing {k}", lineno + 1)))
        };
        let phase = match kind {
            "quadratic" => PhaseKind::Quadratic { gamma: get("gamma")? },
            "cubic" => PhaseKind::Cubic { gamma: get("gamma")? },
            "transform" => PhaseKind::Transform { c2: get("c2")?, m: get("m")?, n: get("n")? },
            other => return Err(Error::Parse(format!("line {}: unknown phase kind {other:?}", lineno + 1))),
        };
        out.push(FamilyCase { phase, a: get("a")?, b: get("b")? });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn fresnel_type_second_derivative() {
        let p = OscillatoryProblem {
            phase: Box::new(|x: f64| x * x),
            phase_deriv: Box::new(|x| 2.0 * x),
            phase_second: Some(Box::new(|_| 2.0)),
            amplitude: Box::new(|_| 1.0),
            m: 2.0,
            a: 0.0,
            b: 10.0,
            hypothesis: Hypothesis::SecondDerivative,
            monotone_attested: true,
        };
        let r = oscillatory_bound_check(&p, &cfg()).unwrap();
        // |∫_0^10 e^{ix²}| is close to √π/2 ≈ 0.886.
        assert!((r.integral_mod - 0.886).abs() < 0.05, "{}", r.integral_mod);
        assert!(r.integral_mod <= 2.0);
        assert!(r.pass);
    }

    #[test]
    fn linear_phase_cannot_be_certified() {
        let p = OscillatoryProblem {
            phase: Box::new(|x: f64| x),
            phase_deriv: Box::new(|_| 1.0),
            phase_second: Some(Box::new(|_| 0.0)),
            amplitude: Box::new(|_| 1.0),
            m: 1.0,
            a: 0.0,
            b: 10.0,
            hypothesis: Hypothesis::SecondDerivative,
            monotone_attested: true,
        };
        assert!(matches!(oscillatory_bound_check(&p, &cfg()), Err(Error::HypothesisRejected(_))));
        let unattested = OscillatoryProblem { monotone_attested: false, hypothesis: Hypothesis::FirstDerivative, ..p };
        assert!(matches!(oscillatory_bound_check(&unattested, &cfg()), Err(Error::HypothesisRejected(_))));
    }

    #[test]
    fn overstated_m_is_caught() {
        let mut p = standard_family()[0].problem().unwrap();
        p.m *= 1.5;
        assert!(matches!(oscillatory_bound_check(&p, &cfg()), Err(Error::HypothesisRejected(_))));
    }

    #[test]
    fn family_parses() {
        let f = parse_family("# demo\nquadratic gamma=2 a=1 b=10\ntransform c2=0.5 m=4 n=1 a=100 b=200 # tail\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].phase, PhaseKind::Quadratic { gamma: 2.0 });
        assert!(parse_family("wiggle a=1 b=2").is_err());
        assert!(parse_family("cubic a=1 b=2").is_err());
        assert_eq!(standard_family().len(), 30);
    }
}
