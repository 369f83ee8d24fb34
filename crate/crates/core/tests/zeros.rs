//! Zero location, counting and gap statistics.

use epstein_core::zeros::{
    gap_stats, merge_zeros, read_zero_table, real_zero_in_unit_interval, scan_zeros, stark_prediction,
    write_zero_table, GapTable, ScanConfig, ZeroRecord, ZeroTableMeta, SCHEMA_VERSION,
};
use epstein_core::{Epstein, EvalConfig, QuadraticForm};
use epstein_oracle::{sign_change_roots, special, Complex64};
use proptest::prelude::*;

fn form(a: i64, b: i64, c: i64) -> QuadraticForm {
    QuadraticForm::new(a, b, c).unwrap()
}

fn ev(a: i64, b: i64, c: i64) -> Epstein {
    Epstein::new(form(a, b, c), EvalConfig::default()).unwrap()
}

fn ts(zs: &[ZeroRecord<f64>]) -> Vec<f64> {
    zs.iter().map(|z| z.t).collect()
}

#[test]
fn first_zeros_of_two_squares() {
    let e = ev(1, 0, 1);
    let cfg = ScanConfig::default();
    let one = scan_zeros(&e, 5.0, 7.0, &cfg).unwrap();
    assert_eq!(one.zeros.len(), 1);
    let z = one.zeros[0];
    assert!((z.t - 6.020_948_904_6).abs() < 1e-8, "{}", z.t);
    assert!(z.bracket <= 1e-9);
    assert_eq!(z.sign_left * z.sign_right, -1);
    assert!(scan_zeros(&e, 1.0, 5.0, &cfg).unwrap().zeros.is_empty());
    assert!(scan_zeros(&e, 7.0, 7.0, &cfg).unwrap().zeros.is_empty());
    assert!(scan_zeros(&e, 0.0, 3001.0, &cfg).is_err());
    assert!(scan_zeros(&e, 9.0, 8.0, &cfg).is_err());
}

/// The scan on [0, 500] against the zeros of ζ and β found independently.
#[test]
fn scan_is_complete_for_two_squares() {
    let (a, b) = (0.0, 500.0);
    let mut want = sign_change_roots(special::hardy_z, a, b, 0.02, 1e-11);
    want.extend(sign_change_roots(special::hardy_z_beta, a, b, 0.02, 1e-11));
    want.sort_by(f64::total_cmp);

    let got = ts(&scan_zeros(&ev(1, 0, 1), a, b, &ScanConfig::default()).unwrap().zeros);
    assert_eq!(got.len(), want.len(), "scan found {} zeros, references {}", got.len(), want.len());
    for (g, w) in got.iter().zip(&want) {
        assert!((g - w).abs() < 1e-6, "{g} vs {w}");
    }
}

#[test]
fn close_pair_is_resolved_when_the_grid_is_finer() {
    let e = ev(1, 1, 1);
    let zs = ts(&scan_zeros(&e, 50.0, 150.0, &ScanConfig::default()).unwrap().zeros);
    let (i, gap) = zs.windows(2).map(|w| w[1] - w[0]).enumerate().min_by(|p, q| p.1.total_cmp(&q.1)).unwrap();
    let (lo, hi) = (zs[i] - 0.25 * gap, zs[i + 1] + 0.25 * gap);
    let w = |t: f64| e.hardy_w(t).unwrap().w;
    assert_eq!(w(lo).signum(), w(hi).signum());
    let cfg = ScanConfig { step_base: gap, dip_search: false, ..ScanConfig::default() };
    let found = ts(&scan_zeros(&e, lo, hi, &cfg).unwrap().zeros);
    assert_eq!(found.len(), 2);
    assert!((found[0] - zs[i]).abs() < 1e-8 && (found[1] - zs[i + 1]).abs() < 1e-8);
}

#[test]
fn dip_search_recovers_a_pair_between_grid_points() {
    let e = ev(1, 0, 1);
    let zs = ts(&scan_zeros(&e, 100.0, 200.0, &ScanConfig::default()).unwrap().zeros);
    let (i, gap) = zs.windows(2).map(|w| w[1] - w[0]).enumerate().min_by(|p, q| p.1.total_cmp(&q.1)).unwrap();
    // Three grid points: both zeros fall between the middle one and an end.
    let mid = 0.5 * (zs[i] + zs[i + 1]);
    let (lo, hi) = (mid - 1.3 * gap, mid + 2.9 * gap);
    let step = 2.1 * gap * (stark_k(&e) * lo).ln();
    let with = ScanConfig { step_base: step, ..ScanConfig::default() };
    let without = ScanConfig { dip_search: false, ..with.clone() };
    let a = scan_zeros(&e, lo, hi, &with).unwrap();
    let b = scan_zeros(&e, lo, hi, &without).unwrap();
    assert!(b.zeros.len() < a.zeros.len(), "dip search changed nothing: {} vs {}", a.zeros.len(), b.zeros.len());
    assert_eq!(a.zeros.len(), zs.iter().filter(|&&t| t > lo && t < hi).count());
}

fn stark_k(e: &Epstein) -> f64 {
    e.form().stark_k::<f64>()
}

#[test]
fn stark_main_term() {
    let f = form(1, 0, 1);
    let pe = std::f64::consts::PI * std::f64::consts::E;
    assert!(stark_prediction(&f, pe).unwrap().main.abs() < 1e-12);
    assert!(stark_prediction(&f, 2.0).is_err());
    let big = form(1, 0, 10007);
    let mut prev = f64::NEG_INFINITY;
    for t in (3..200).map(|t| t as f64) {
        let p = stark_prediction(&big, t).unwrap().main;
        assert!(p > prev);
        prev = p;
    }
}

#[test]
fn real_zeros_follow_the_threshold() {
    for (a, b, c) in [(1, 0, 57), (1, 0, 10007)] {
        let e = ev(a, b, c);
        let z = real_zero_in_unit_interval(&e).unwrap().expect("real zero expected");
        assert!(z.sigma > 0.5 && z.sigma < 1.0);
        assert!(z.value.abs() <= 1e-8, "({a},{b},{c}): |zeta(sigma)| = {}", z.value);
    }
    assert!(real_zero_in_unit_interval(&ev(1, 0, 1)).unwrap().is_none());
    // 4ζβ keeps one sign on (1/2, 1).
    let vals: Vec<f64> = (1..100)
        .map(|i| special::two_squares_zeta(Complex64::new(0.5 + 0.005 * i as f64, 0.0)).re)
        .collect();
    assert!(vals.iter().all(|v| *v < 0.0));
}

#[test]
fn gap_table_basics() {
    let f = form(1, 0, 1);
    let empty = GapTable::<f64>::new(f, 10.0, vec![]).unwrap();
    assert_eq!(gap_stats(&empty, 1.0).unwrap(), 0);
    let zs = scan_zeros(&ev(1, 0, 1), 0.0, 100.0, &ScanConfig::default()).unwrap().zeros;
    let t = GapTable::new(f, 100.0, zs.clone()).unwrap();
    let min = t.gaps().iter().cloned().fold(f64::INFINITY, f64::min);
    assert_eq!(gap_stats(&t, min).unwrap(), zs.len() - 1);
    assert_eq!(gap_stats(&t, t.max_gap().unwrap() * 1.0001).unwrap(), 0);
    assert!(gap_stats(&t, 0.0).is_err());
    let mut dup = zs.clone();
    dup.push(zs[3]);
    dup.sort_by(|p, q| p.t.total_cmp(&q.t));
    assert!(GapTable::new(f, 100.0, dup).is_err());
}

#[test]
fn resumed_scans_equal_one_scan() {
    let e = ev(1, 1, 1);
    let cfg = ScanConfig::default();
    let whole = scan_zeros(&e, 0.0, 120.0, &cfg).unwrap().zeros;
    let p = scan_zeros(&e, 0.0, 70.0, &cfg).unwrap().zeros;
    let q = scan_zeros(&e, 70.0, 120.0, &cfg).unwrap().zeros;
    let merged = merge_zeros(&p, &q, 1e-6);
    assert_eq!(merged.len(), whole.len());
    for (m, w) in merged.iter().zip(&whole) {
        assert!((m.t - w.t).abs() <= m.bracket + w.bracket + 1e-12);
    }
    assert_eq!(merge_zeros(&merged, &p, 1e-6), merged);
}

#[test]
fn tables_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.csv");
    let zs = scan_zeros(&ev(1, 0, 1), 0.0, 40.0, &ScanConfig::default()).unwrap().zeros;
    let meta = ZeroTableMeta {
        schema: SCHEMA_VERSION,
        form: "1,0,1".into(),
        range: [0.0, 40.0],
        covered: vec![[0.0, 40.0]],
        step_base: 0.2,
        count: zs.len(),
        stark_prediction: Some(stark_prediction(&form(1, 0, 1), 40.0).unwrap().main),
    };
    write_zero_table(&path, &meta, &zs).unwrap();
    let (m, back) = read_zero_table(&path).unwrap();
    assert_eq!(m, meta);
    assert_eq!(back, zs);
    assert!(m.covers(0.0, 40.0) && !m.covers(0.0, 41.0));

    std::fs::write(&path, "t,bracket\n6.02,1e-9\n").unwrap();
    let (_, plain) = read_zero_table(&path).unwrap();
    assert_eq!(plain.len(), 1);
    assert_eq!(plain[0].sign_left, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gap_counts_are_monotone(mut pts in proptest::collection::vec(0.0f64..100.0, 0..60), v in 0.01f64..10.0, w in 0.01f64..10.0) {
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        let zs: Vec<ZeroRecord<f64>> = pts.iter().map(|&t| ZeroRecord { t, bracket: 0.0, sign_left: 1, sign_right: -1 }).collect();
        let n = zs.len();
        let t = GapTable::new(form(1, 0, 1), 100.0, zs).unwrap();
        let (lo, hi) = if v < w { (v, w) } else { (w, v) };
        let (r_lo, r_hi) = (gap_stats(&t, lo).unwrap(), gap_stats(&t, hi).unwrap());
        prop_assert!(r_hi <= r_lo);
        prop_assert!(r_lo <= n.saturating_sub(1));
        prop_assert!(r_lo as f64 * lo <= 100.0 + lo);
    }
}
