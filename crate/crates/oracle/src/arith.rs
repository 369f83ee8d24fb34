//! Brute-force arithmetic of binary quadratic forms.

use num_complex::Complex64;

fn q(a: i64, b: i64, c: i64, x: i64, y: i64) -> i64 {
    a * x * x + b * x * y + c * y * y
}

/// `r_Q(n)` for `n ≤ limit` by scanning a square box that covers the ellipse.
pub fn rep_counts(a: i64, b: i64, c: i64, limit: i64) -> Vec<u32> {
    let disc = 4 * a * c - b * b;
    let side = (((4 * a.max(c) * limit) as f64 / disc as f64).sqrt()).ceil() as i64 + 2;
    let mut out = vec![0u32; limit as usize + 1];
    for x in -side..=side {
        for y in -side..=side {
            let v = q(a, b, c, x, y);
            if v >= 1 && v <= limit {
                out[v as usize] += 1;
            }
        }
    }
    out
}

/// `Σ'_{|x|,|y| ≤ m} Q(x, y)^{−s}` for real `s`.
pub fn lattice_sum(a: i64, b: i64, c: i64, s: f64, m: i64) -> f64 {
    let mut acc = 0.0;
    for x in -m..=m {
        for y in -m..=m {
            if x != 0 || y != 0 {
                acc += (q(a, b, c, x, y) as f64).powf(-s);
            }
        }
    }
    acc
}

/// `Σ_{x, y mod k} e(h Q(x, y) / k)` term by term.
pub fn gauss_sum(a: i64, b: i64, c: i64, k: i64, h: i64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for x in 0..k {
        for y in 0..k {
            let r = (h * q(a, b, c, x, y)).rem_euclid(k);
            acc += Complex64::from_polar(1.0, std::f64::consts::TAU * r as f64 / k as f64);
        }
    }
    acc
}

/// Reduced forms of discriminant `−Δ`, searching `a` up to `Δ` rather than `√(Δ/3)`.
pub fn reduced_forms(disc: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 1..=disc {
        for b in -a..=a {
            let num = b * b + disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let reduced = b.abs() <= a && a <= c && !(b < 0 && (b.abs() == a || a == c));
            if reduced {
                out.push((a, b, c));
            }
        }
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
