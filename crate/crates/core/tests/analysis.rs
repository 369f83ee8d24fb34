//! Smoothing, oscillatory integrals, rational approximation and phases.

use epstein_core::analysis::oscillatory::{standard_family, PhaseKind};
use epstein_core::analysis::{
    cf_approx, convergents, eta_weight, first_power_mean, gaussian_window_integrals, make_smoothing,
    mean_square_coeffs, n_j_values, oscillatory_bound_check, phase_deriv_f, phase_f, phi, phi_deriv, smoothstep,
    Hypothesis, OscillatoryProblem, QuadConfig,
};
use epstein_core::{Epstein, EvalConfig, QuadraticForm};
use epstein_oracle::{arith, central_diff5, Complex64};
use proptest::prelude::*;

fn form(a: i64, b: i64, c: i64) -> QuadraticForm {
    QuadraticForm::new(a, b, c).unwrap()
}

#[test]
fn smoothing_window() {
    let p = make_smoothing(1e4f64, 10.0, 0.1).unwrap();
    assert_eq!(p.L, 8.0 * 1e4f64.ln().sqrt());
    assert_eq!(p.G, 10.0 / p.L);
    assert!((p.Y - 10f64.powf(4.4) / 10.0).abs() <= 1e-10 * p.Y);
    assert!(make_smoothing(1e4f64, 1e4f64.powf(0.6), 0.1).is_err());
    assert!(make_smoothing(1e4f64, 10.0, 0.0).is_err());
    assert!(make_smoothing(50.0f64, 3.0, 0.1).is_err());
}

#[test]
fn eta_shape() {
    let (c, y) = (3.0f64, 0.5);
    assert_eq!(eta_weight(c, c, y, 2).unwrap(), 1.0);
    assert_eq!(eta_weight(c + 2.0 * y, c, y, 2).unwrap(), 0.0);
    assert_eq!(eta_weight(c - 2.0 * y, c, y, 2).unwrap(), 0.0);
    assert!((eta_weight(c + 1.5 * y, c, y, 2).unwrap() - 0.5).abs() < 1e-15);
    assert!(eta_weight(0.0, 0.0, 0.0, 2).is_err());
    assert!(eta_weight(0.0, 0.0, 1.0, 1).is_err());
}

/// The smoothstep's derivatives of order below J vanish at both ends of the band.
#[test]
fn eta_smoothness_order() {
    for j in [2u32, 3, 5] {
        for r in 1..j {
            // S(u) = C u^J + ..., so S(h)/h^r = O(h^{J−r}) vanishes with h.
            let h: f64 = 1e-12;
            assert!(smoothstep(h, j) / h.powi(r as i32) < 1e-8, "J={j}, r={r}");
        }
        let h: f64 = 1e-3;
        let lead = smoothstep(h, j) / h.powi(j as i32);
        assert!(lead > 1.0, "order J term must be present, J={j}");
        for i in 0..=100 {
            let u = i as f64 / 100.0;
            assert!((smoothstep(u, j) + smoothstep(1.0 - u, j) - 1.0).abs() < 1e-14);
        }
    }
}

#[test]
fn phi_values_and_derivative() {
    assert_eq!(phi(0.0f64).unwrap(), 0.0);
    assert!((phi(1.0f64).unwrap() - ((1.0 + 2f64.sqrt()).ln() + 2f64.sqrt())).abs() < 1e-15);
    assert!((phi(1e-8f64).unwrap() / 1e-4 - 2.0).abs() < 1e-4);
    assert!(phi(-1.0f64).is_err());
    for i in 1..=100 {
        let x = i as f64 / 10.0;
        let fd = central_diff5(|u| phi(u).unwrap(), x, 1e-3 * x);
        assert!((fd / phi_deriv(x).unwrap() - 1.0).abs() < 1e-6, "x = {x}");
    }
}

#[test]
fn phase_derivative() {
    assert_eq!(phase_deriv_f(0.2f64, 3.0, 3.0, 50.0).unwrap(), 0.0);
    assert!(phase_deriv_f(0.2f64, 3.0, 1.0, 0.0).is_err());
    let t = 2000.0;
    for &(c2, m, n) in &[(0.1, 5.0, 2.0), (1.0, 2.0, 1.0), (0.01, 30.0, 7.0)] {
        for i in 0..=50 {
            let x = t / 2.0 + t / 2.0 * i as f64 / 50.0;
            let exact = phase_deriv_f(c2, m, n, x).unwrap();
            let fd = central_diff5(|u| phase_f(c2, m, n, u).unwrap(), x, 1e-3 * x);
            assert!((fd / exact - 1.0).abs() < 1e-6);
            assert!(exact > 0.0);
            assert!(exact >= (c2 / x).sqrt() * (m.sqrt() - n.sqrt()));
        }
    }
}

/// Simpson's rule on a fine uniform grid, independent of the library quadrature.
fn simpson(f: impl Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        acc += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

#[test]
fn oscillatory_family_against_simpson() {
    let cfg = QuadConfig::default();
    let family = standard_family();
    assert_eq!(family.len(), 30);
    for case in &family {
        let p = case.problem().unwrap();
        let r = oscillatory_bound_check(&p, &cfg).unwrap();
        let direct =
            simpson(|x| Complex64::from_polar((p.amplitude)(x), (p.phase)(x)), case.a, case.b, 400_000).norm();
        assert!((r.integral_mod - direct).abs() < 1e-6, "{case:?}: {} vs {direct}", r.integral_mod);
        assert!(r.pass && r.bound == 4.0 / p.m);
        if let PhaseKind::Transform { c2, m, n } = case.phase {
            let shape = (c2 / case.b).sqrt() * (m.sqrt() - n.sqrt());
            assert!(p.m >= shape);
        }
    }
}

#[test]
fn fresnel_example() {
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
    let r = oscillatory_bound_check(&p, &QuadConfig::default()).unwrap();
    let direct = simpson(|x| Complex64::from_polar(1.0, x * x), 0.0, 10.0, 400_000).norm();
    assert!((r.integral_mod - direct).abs() < 1e-7);
    assert!(r.integral_mod <= 4.0 / p.m);
}

#[test]
fn continued_fractions() {
    let r = cf_approx(3, 1.0).unwrap();
    assert_eq!((r.k, r.h), (2, 1));
    assert!((r.err - (2.0 - 3f64.sqrt())).abs() < 1e-15);
    let r = cf_approx(3, 15.0).unwrap();
    assert!((8..=30).contains(&r.h) && r.scaled_err() <= 1.0);
    assert!(cf_approx(16, 2.0).is_err());
    // √228 = [15; 10, 30]: err·h² alternates near 0.0996 and 0.0331.
    let cs = convergents(228, 20).unwrap();
    assert_eq!(cs.len(), 20);
    let lo = cs.iter().map(|c| c.scaled_err()).fold(f64::INFINITY, f64::min);
    assert!(lo > 0.03 && lo < 0.034, "{lo}");
    assert!(cs.iter().all(|c| c.scaled_err() <= 1.0 && c.is_reduced()));
}

#[test]
fn n_j_desk_instance() {
    let f = form(1, 0, 57);
    let disc = f.discriminant() as f64;
    let p = make_smoothing(1e4f64, 10.0, 0.1).unwrap();
    let r = cf_approx(f.discriminant(), (p.T / p.Y).sqrt()).unwrap();
    let u = p.T;
    let big_m = [p.p_of(&f, u) - 2.0 * p.Y, p.p_of(&f, u) + 2.0 * p.Y];
    let dev = u / std::f64::consts::TAU * (disc.sqrt() - r.k as f64 / r.h as f64);
    let small_m = [2.0 * p.Y - dev, 2.0 * p.Y + dev];
    let (n1, n2) = n_j_values(disc, r.h as u64, small_m[0], small_m[1], big_m[0], big_m[1]).unwrap();
    for (j, n) in [n1, n2].into_iter().enumerate() {
        let want = disc * (r.h * r.h) as f64 * small_m[j] * small_m[j] / big_m[j];
        assert!((n - want).abs() <= 1e-12 * want);
        // n_j ≍ 8πΔ₀·(h²Y/T)·Y/√Δ.
        let scale = 8.0 * std::f64::consts::PI * disc.sqrt() * (r.h * r.h) as f64 * p.Y / p.T * p.Y;
        assert!(n / scale > 0.5 && n / scale < 2.0, "n_{} / scale = {}", j + 1, n / scale);
    }
    assert_eq!(n_j_values(1.0f64, 1, 1.0, 1.0, 1.0, 1.0).unwrap(), (1.0, 1.0));
}

#[test]
fn mean_square_growth() {
    let f = form(1, 0, 1);
    assert_eq!(mean_square_coeffs(&f, 5.0).unwrap(), 112);
    let reps = arith::rep_counts(1, 0, 1, 1000);
    let direct: u128 = reps[1..].iter().map(|&r| (r as u128).pow(2)).sum();
    assert_eq!(mean_square_coeffs(&f, 1000.0).unwrap(), direct);
    let ratio = |x: f64| mean_square_coeffs(&f, x).unwrap() as f64 / x.powf(1.2);
    let (a, b, c) = (ratio(1e3), ratio(1e4), ratio(1e5));
    assert!(b <= a && c <= b, "{a} {b} {c}");
}

#[test]
fn power_mean_small_cases() {
    let e = Epstein::new(form(1, 0, 1), EvalConfig::default()).unwrap();
    let cfg = QuadConfig::default();
    assert_eq!(first_power_mean(&e, 100.0, 0.0, &cfg).unwrap(), 0.0);
    assert!(first_power_mean(&e, 100.0, 0.5, &cfg).is_err());
    let one = first_power_mean(&e, 100.0, 10.0, &cfg).unwrap();
    let two = first_power_mean(&e, 100.0, 20.0, &cfg).unwrap();
    assert!(one >= 1.0 && two / one > 2.0 / 3.0 && two / one < 6.0, "{one} {two}");
    let direct = simpson(|t| Complex64::new(e.zeta_q(Complex64::new(0.5, t)).unwrap().zeta.norm(), 0.0), 100.0, 110.0, 4000);
    assert!((one - direct.re).abs() < 1e-4 * one, "{one} vs {}", direct.re);
}

#[test]
fn gaussian_window_limits() {
    let e = Epstein::new(form(1, 0, 1), EvalConfig::default()).unwrap();
    let cfg = QuadConfig::default();
    // No zero of W near t = 3 (the first is at 6.02).
    let r = gaussian_window_integrals(&e, 3.0, 0.5, 0.3, &cfg).unwrap();
    assert!(r.zeros.is_empty());
    assert!((r.i1 - r.i2.norm()).abs() <= 1e-10 * r.i1);
    let s = gaussian_window_integrals(&e, 6.0, 0.5, 0.3, &cfg).unwrap();
    assert_eq!(s.zeros.len(), 1);
    assert!(s.i1 > s.i2.norm());
    let g = 0.01;
    let t = gaussian_window_integrals(&e, 3.0, 0.1, g, &cfg).unwrap();
    let w = e.hardy_w(3.0).unwrap().w;
    assert!((t.i2.re / (std::f64::consts::PI.sqrt() * g) / w - 1.0).abs() < 0.01);
}

proptest! {
    #[test]
    fn eta_is_a_bump(x in -10.0f64..10.0, c in -3.0f64..3.0, y in 0.1f64..3.0, j in 2u32..7) {
        let v = eta_weight(x, c, y, j).unwrap();
        prop_assert!((0.0..=1.0).contains(&v));
        prop_assert!((v - eta_weight(2.0 * c - x, c, y, j).unwrap()).abs() < 1e-12);
        let further = eta_weight(x + (x - c).signum() * 0.01, c, y, j).unwrap();
        prop_assert!(further <= v + 1e-12);
    }

    #[test]
    fn smoothing_identities(t in 100.0f64..1e8, eps in 0.01f64..0.24, frac in 0.0f64..1.0) {
        let (lo, hi) = (t.powf(eps), t.powf(0.5 - eps));
        prop_assume!(lo < hi);
        let v = lo + frac * (hi - lo);
        let p = make_smoothing(t, v, eps).unwrap();
        prop_assert!((p.L - 8.0 * t.ln().sqrt()).abs() <= 1e-15 * p.L);
        prop_assert!((p.G * p.L - v).abs() <= 1e-14 * v);
        prop_assert!((p.V * p.Y - t.powf(1.0 + eps)).abs() <= 1e-14 * p.V * p.Y);
    }

    #[test]
    fn convergents_are_good_approximations(d in 2i64..100_000) {
        prop_assume!(!is_square(d));
        let cs = convergents(d, 12).unwrap();
        for c in &cs {
            prop_assert!(c.is_reduced());
            prop_assert!(c.scaled_err() > 0.0 && c.scaled_err() <= 1.0);
            if c.h < 1 << 20 {
                // The direct difference loses digits to cancellation.
                let direct = ((d as f64).sqrt() - c.k as f64 / c.h as f64).abs();
                prop_assert!((direct - c.err).abs() <= 1e-9 * c.err + 1e-15 * (d as f64).sqrt());
            }
        }
    }

    #[test]
    fn phase_derivative_is_odd_in_frequencies(c2 in 0.01f64..2.0, m in 0.1f64..50.0, n in 0.1f64..50.0, x in 1.0f64..1e4) {
        let p = phase_deriv_f(c2, m, n, x).unwrap();
        let q = phase_deriv_f(c2, n, m, x).unwrap();
        prop_assert!((p + q).abs() <= 1e-15 * p.abs().max(1.0));
        prop_assert_eq!(p > 0.0, m > n);
    }
}

fn is_square(d: i64) -> bool {
    let r = (d as f64).sqrt().round() as i64;
    r * r == d
}
