//! Zero tables on disk: CSV rows `t,bracket,sign_left,sign_right` plus a JSON sidecar.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::ZeroRecord;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Sidecar describing a zero table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTableMeta {
    pub schema: u32,
    /// Form as `"a,b,c"`.
    pub form: String,
    /// Hull of the scanned ranges.
    pub range: [f64; 2],
    /// Disjoint scanned intervals, sorted.
    pub covered: Vec<[f64; 2]>,
    pub step_base: f64,
    pub count: usize,
    /// Main term of the zero count at `range[1]`, when defined.
    pub stark_prediction: Option<f64>,
}

impl ZeroTableMeta {
    /// Whether `[a, b]` lies inside one scanned interval.
    pub fn covers(&self, a: f64, b: f64) -> bool {
        self.covered.iter().any(|iv| iv[0] <= a && b <= iv[1])
    }
}

/// Path of the JSON sidecar belonging to a CSV table.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

/// Writes the CSV table and its sidecar.
pub fn write_zero_table(csv: &Path, meta: &ZeroTableMeta, zeros: &[ZeroRecord<f64>]) -> Result<()> {
    let mut wr = csv::Writer::from_writer(BufWriter::new(File::create(csv)?));
    wr.write_record(["t", "bracket", "sign_left", "sign_right"])?;
    for z in zeros {
        wr.write_record([
            z.t.to_string(),
            z.bracket.to_string(),
            z.sign_left.to_string(),
            z.sign_right.to_string(),
        ])?;
    }
    wr.flush()?;
    let side = BufWriter::new(File::create(sidecar_path(csv))?);
    serde_json::to_writer_pretty(side, meta)?;
    Ok(())
}

/// Reads a table written by [`write_zero_table`].
///
/// The sign columns are optional; a plain `t,bracket` file is accepted and
/// its signs are left at zero.
pub fn read_zero_table(csv: &Path) -> Result<(ZeroTableMeta, Vec<ZeroRecord<f64>>)> {
    let meta: ZeroTableMeta = serde_json::from_reader(File::open(sidecar_path(csv))?)?;
    if meta.schema != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported zero-table schema {}", meta.schema)));
    }
    let mut rd = csv::Reader::from_path(csv)?;
    let head: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if head.len() < 2 || head[0] != "t" || head[1] != "bracket" {
        return Err(Error::Parse(format!("zero table header must start with t,bracket, got {head:?}")));
    }
    let mut zeros = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let num = |i: usize| -> Result<f64> {
            rec.get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad field {i} in {rec:?}")))
        };
        let sgn = |i: usize| -> i8 { rec.get(i).and_then(|s| s.parse().ok()).unwrap_or(0) };
        zeros.push(ZeroRecord { t: num(0)?, bracket: num(1)?, sign_left: sgn(2), sign_right: sgn(3) });
    }
    Ok((meta, zeros))
}

/// Union of two zero lists; ordinates closer than `tol` are one zero (the
/// tighter bracket is kept).
pub fn merge_zeros(a: &[ZeroRecord<f64>], b: &[ZeroRecord<f64>], tol: f64) -> Vec<ZeroRecord<f64>> {
    let mut all: Vec<ZeroRecord<f64>> = a.iter().chain(b).copied().collect();
    all.sort_by(|p, q| p.t.total_cmp(&q.t));
    let mut out: Vec<ZeroRecord<f64>> = Vec::with_capacity(all.len());
    for z in all {
        match out.last_mut() {
            Some(last) if (z.t - last.t).abs() <= tol => {
                if z.bracket < last.bracket {
                    *last = z;
                }
            }
            _ => out.push(z),
        }
    }
    out
}

/// Union of closed intervals.
pub fn merge_intervals(mut ivs: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    ivs.sort_by(|p, q| p[0].total_cmp(&q[0]));
    let mut out: Vec<[f64; 2]> = Vec::new();
    for iv in ivs {
        match out.last_mut() {
            Some(last) if iv[0] <= last[1] => last[1] = last[1].max(iv[1]),
            _ => out.push(iv),
        }
    }
    out
}
