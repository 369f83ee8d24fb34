use std::io::{Read, Write};

use super::QuadraticForm;
use crate::error::{Error, Result};

/// Default cap on the table length (entries, 4 bytes each).
pub const DEFAULT_TABLE_BUDGET: u64 = 50_000_000;

/// Exact representation counts `r_Q(n)` for `1 ≤ n ≤ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepCountTable {
    form: QuadraticForm,
    // counts[0] is unused and always zero.
    counts: Vec<u32>,
}

/// Builds the table for `n ≤ limit` under [`DEFAULT_TABLE_BUDGET`].
pub fn rep_counts(form: &QuadraticForm, limit: u64) -> Result<RepCountTable> {
    rep_counts_with_budget(form, limit, DEFAULT_TABLE_BUDGET)
}

/// Builds the table, failing with a resource error if `limit > budget`.
///
/// For each `x` the admissible `y` satisfy `(2cy + bx)² ≤ 4cN − Δx²`, so the
/// `y` range is obtained from an integer square root with no rounding.
pub fn rep_counts_with_budget(form: &QuadraticForm, limit: u64, budget: u64) -> Result<RepCountTable> {
    if limit < 1 {
        return Err(Error::InvalidArgument("rep_counts needs N >= 1".into()));
    }
    if limit > budget {
        return Err(Error::Resource(format!("table of {limit} entries exceeds budget {budget}")));
    }
    let (a, b, c) = (form.a() as i128, form.b() as i128, form.c() as i128);
    let disc = form.discriminant() as i128;
    let n = limit as i128;
    let mut counts = vec![0u32; limit as usize + 1];
    let x_max = isqrt128(4 * c * n / disc);
    for x in -x_max..=x_max {
        let d = 4 * c * n - disc * x * x;
        if d < 0 {
            continue;
        }
        let sd = isqrt128(d);
        let y_lo = div_ceil(-sd - b * x, 2 * c);
        let y_hi = div_floor(sd - b * x, 2 * c);
        for y in y_lo..=y_hi {
            let q = a * x * x + b * x * y + c * y * y;
            if q >= 1 {
                counts[q as usize] += 1;
            }
        }
    }
    Ok(RepCountTable { form: *form, counts })
}

impl RepCountTable {
    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    /// The largest `n` covered.
    pub fn limit(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    /// `r_Q(n)`; panics if `n` is outside `1..=limit`.
    pub fn get(&self, n: u64) -> u32 {
        assert!(n >= 1 && n <= self.limit(), "n = {n} outside table");
        self.counts[n as usize]
    }

    /// Raw counts indexed by `n` (entry 0 is zero).
    pub fn as_slice(&self) -> &[u32] {
        &self.counts
    }

    /// `(n, r_Q(n))` for every represented `n`.
    pub fn nonzero(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &r)| r > 0)
            .map(|(n, &r)| (n as u64, r))
    }

    /// Number of nonzero lattice points with `Q ≤ limit`.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&r| r as u64).sum()
    }

    /// Writes the table as CSV with header `n,r`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::Writer::from_writer(w);
        wr.write_record(["n", "r"])?;
        for (n, &r) in self.counts.iter().enumerate().skip(1) {
            wr.write_record([n.to_string(), r.to_string()])?;
        }
        wr.flush()?;
        Ok(())
    }

    /// Reads a table written by [`write_csv`](Self::write_csv). Rows must be `1..=N` in order.
    pub fn read_csv<R: Read>(form: &QuadraticForm, r: R) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(r);
        let headers = rd.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["n", "r"] {
            return Err(Error::Parse(format!("expected header n,r, got {headers:?}")));
        }
        let mut counts = vec![0u32];
        for rec in rd.records() {
            let rec = rec?;
            let n: u64 = field(&rec, 0)?;
            let r: u32 = field(&rec, 1)?;
            if n != counts.len() as u64 {
                return Err(Error::Parse(format!("row for n = {n} out of order")));
            }
            counts.push(r);
        }
        if counts.len() < 2 {
            return Err(Error::Parse("empty rep-count table".into()));
        }
        Ok(Self { form: *form, counts })
    }
}

fn field<F: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<F> {
    rec.get(i)
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad field {i} in {rec:?}")))
}

fn isqrt128(n: i128) -> i128 {
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn div_floor(p: i128, q: i128) -> i128 {
    p.div_euclid(q)
}

fn div_ceil(p: i128, q: i128) -> i128 {
    -(-p).div_euclid(q)
}
