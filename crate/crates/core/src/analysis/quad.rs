//! Adaptive Gauss–Kronrod (7, 15) quadrature for vector-valued integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
/// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Largest number of panels before giving up.
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-10, max_panels: 200_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T, const N: usize> {
    pub value: [T; N],
    pub err: T,
    pub evaluations: usize,
}

struct Panel<T, const N: usize> {
    a: T,
    b: T,
    value: [T; N],
    err: T,
}

impl<T: Scalar, const N: usize> PartialEq for Panel<T, N> {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl<T: Scalar, const N: usize> Eq for Panel<T, N> {}
impl<T: Scalar, const N: usize> PartialOrd for Panel<T, N> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<T: Scalar, const N: usize> Ord for Panel<T, N> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.partial_cmp(&o.err).unwrap_or(Ordering::Equal)
    }
}

fn gk15<T: Scalar, const N: usize>(
    f: &mut impl FnMut(T) -> Result<[T; N]>,
    a: T,
    b: T,
) -> Result<Panel<T, N>> {
    let half = T::lit(0.5);
    let c = (a + b) * half;
    let h = (b - a) * half;
    let mut k = [T::zero(); N];
    let mut g = [T::zero(); N];
    let mut acc = |x: T, wk: f64, wg: Option<f64>| -> Result<()> {
        let v = f(x)?;
        for j in 0..N {
            k[j] += v[j] * T::lit(wk);
            if let Some(w) = wg {
                g[j] += v[j] * T::lit(w);
            }
        }
        Ok(())
    };
    acc(c, WGK[7], Some(WG[3]))?;
    for i in 0..7 {
        let dx = h * T::lit(XGK[i]);
        let wg = if i % 2 == 1 { Some(WG[i / 2]) } else { None };
        acc(c - dx, WGK[i], wg)?;
        acc(c + dx, WGK[i], wg)?;
    }
    let mut err = T::zero();
    let mut value = [T::zero(); N];
    for j in 0..N {
        value[j] = k[j] * h;
        err = err.max(((k[j] - g[j]) * h).abs());
    }
    Ok(Panel { a, b, value, err })
}

/// Integrates `f` over consecutive panels `[p₀, p₁], [p₁, p₂], …`, bisecting
/// the panel with the largest error until
/// `err ≤ max(abs_tol, rel_tol · max_j |I_j|)`.
pub fn integrate<T: Scalar, const N: usize>(
    mut f: impl FnMut(T) -> Result<[T; N]>,
    points: &[T],
    cfg: &QuadConfig,
) -> Result<QuadResult<T, N>> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument("quadrature needs at least two break points".into()));
    }
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    for w in points.windows(2) {
        if !(w[1] >= w[0]) {
            return Err(Error::InvalidArgument(format!("break points out of order: {} > {}", w[0], w[1])));
        }
        if w[1] > w[0] {
            heap.push(gk15(&mut f, w[0], w[1])?);
            evals += 15;
        }
    }
    let total = |heap: &BinaryHeap<Panel<T, N>>| {
        let mut v = [T::zero(); N];
        let mut e = T::zero();
        for p in heap.iter() {
            for (acc, x) in v.iter_mut().zip(p.value) {
                *acc += x;
            }
            e += p.err;
        }
        (v, e)
    };
    loop {
        let (value, err) = total(&heap);
        let scale = value.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let goal = T::lit(cfg.abs_tol).max(T::lit(cfg.rel_tol) * scale);
        if err <= goal {
            return Ok(QuadResult { value, err, evaluations: evals });
        }
        if heap.len() >= cfg.max_panels {
            return Err(Error::Quadrature(format!(
                "error {err} above goal {goal} after {} panels",
                heap.len()
            )));
        }
        let worst = heap.pop().expect("non-empty");
        let mid = (worst.a + worst.b) * T::lit(0.5);
        if !(mid > worst.a && mid < worst.b) {
            // Cannot split further; accept what we have.
            heap.push(worst);
            let (value, err) = total(&heap);
            return Ok(QuadResult { value, err, evaluations: evals });
        }
        heap.push(gk15(&mut f, worst.a, mid)?);
        heap.push(gk15(&mut f, mid, worst.b)?);
        evals += 30;
    }
}

/// Break points from `a` to `b` with spacing at most `h`.
pub fn uniform_points<T: Scalar>(a: T, b: T, h: T) -> Vec<T> {
    let n = ((b - a) / h).ceil().to_f64_lossy().max(1.0) as usize;
    let step = (b - a) / T::from_usize(n).unwrap();
    let mut pts: Vec<T> = (0..n).map(|i| a + step * T::from_usize(i).unwrap()).collect();
    pts.push(b);
    pts
}
