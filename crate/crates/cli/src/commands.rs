use std::path::{Path, PathBuf};

use epstein_core::verify::{run_suite, VerifyOptions};
use epstein_core::zeros::{
    merge_intervals, merge_zeros, read_zero_table, scan_zeros, stark_error_weight, stark_prediction, write_zero_table,
    GapTable, ScanConfig, ZeroRecord, ZeroTableMeta, SCHEMA_VERSION,
};
use epstein_core::zeta::EpsteinZeta;
use epstein_core::{Complex64, Cplx, Error, EvalConfig, QuadraticForm, Result, Scalar};
use serde_json::{json, Value};

use crate::config::FileConfig;
use crate::{EvalArgs, GapsArgs, Precision, VerifyArgs, ZerosArgs};

/// Environment variable naming the default directory for zero tables.
pub const CACHE_ENV: &str = "EPSTEIN_LAB_CACHE";

/// Ordinates closer than this are the same zero when tables are merged.
const MERGE_TOL: f64 = 1e-6;

fn print(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidArgument(format!("missing --{flag}")))
}

fn form_arg(flag: Option<String>, file: &FileConfig) -> Result<QuadraticForm> {
    required(file.pick(flag, "form")?, "form")?.parse()
}

fn parse_range(s: &str) -> Result<(f64, f64)> {
    let bad = || Error::Parse(format!("range must be t0:t1, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::InvalidArgument(format!("range {s:?} must satisfy t0 <= t1")));
    }
    Ok((a, b))
}

fn parse_v_list(s: &str) -> Result<Vec<f64>> {
    let mut vs = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad V value {p:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if vs.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidArgument("V values must be positive".into()));
    }
    vs.sort_by(f64::total_cmp);
    vs.dedup();
    Ok(vs)
}

fn default_table(form: &QuadraticForm) -> PathBuf {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".epstein-lab"));
    dir.join(format!("zeros_{}_{}_{}.csv", form.a(), form.b(), form.c()))
}

pub fn eval(a: EvalArgs, precision: Precision, file: &FileConfig) -> Result<u8> {
    let form = form_arg(a.form, file)?;
    let raw = required(file.pick(a.s, "s")?, "s")?;
    let s: Complex64 = raw
        .replace(' ', "")
        .parse()
        .map_err(|_| Error::Parse(format!("cannot parse complex number {raw:?}")))?;
    let v = match precision {
        Precision::F32 => eval_with::<f32>(form, s)?,
        Precision::F64 => eval_with::<f64>(form, s)?,
    };
    print(&v)?;
    Ok(0)
}

fn eval_with<T: Scalar>(form: QuadraticForm, s: Complex64) -> Result<Value> {
    let ev = EpsteinZeta::<T>::new(form, EvalConfig::default())?;
    let v = ev.zeta_q(Cplx::new(T::lit(s.re), T::lit(s.im)))?;
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "form": form.to_string(),
        "precision": T::NAME,
        "s_re": s.re,
        "s_im": s.im,
        "zeta_re": v.zeta.re.to_f64_lossy(),
        "zeta_im": v.zeta.im.to_f64_lossy(),
        "est_err": v.zeta_err().to_f64_lossy(),
    }))
}

/// Parts of `[a, b]` not inside any of the sorted, disjoint `covered` intervals.
fn uncovered(a: f64, b: f64, covered: &[[f64; 2]]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut start = a;
    for iv in covered {
        if iv[1] < start || iv[0] > b {
            continue;
        }
        if iv[0] > start {
            out.push((start, iv[0]));
        }
        start = start.max(iv[1]);
    }
    if start < b || (a == b && out.is_empty() && !covered.iter().any(|iv| iv[0] <= a && a <= iv[1])) {
        out.push((start, b));
    }
    out
}

struct Scanned {
    zeros: Vec<ZeroRecord<f64>>,
    evaluations: usize,
    warnings: Vec<String>,
}

fn scan_with<T: Scalar>(form: QuadraticForm, parts: &[(f64, f64)], cfg: &ScanConfig) -> Result<Scanned> {
    let ev = EpsteinZeta::<T>::new(form, EvalConfig::default())?;
    let mut out = Scanned { zeros: Vec::new(), evaluations: 0, warnings: Vec::new() };
    for &(a, b) in parts {
        let r = scan_zeros(&ev, T::lit(a), T::lit(b), cfg)?;
        out.evaluations += r.evaluations;
        out.warnings.extend(r.warnings);
        out.zeros.extend(r.zeros.into_iter().map(|z| ZeroRecord {
            t: z.t.to_f64_lossy(),
            bracket: z.bracket.to_f64_lossy(),
            sign_left: z.sign_left,
            sign_right: z.sign_right,
        }));
    }
    Ok(out)
}

pub fn zeros(a: ZerosArgs, precision: Precision, file: &FileConfig) -> Result<u8> {
    let form = form_arg(a.form, file)?;
    let (t0, t1) = parse_range(&required(file.pick(a.range, "range")?, "range")?)?;
    let step = file.pick(a.step, "step")?.unwrap_or(ScanConfig::default().step_base);
    let resume = a.resume || file.pick::<bool>(None, "resume")?.unwrap_or(false);
    let path = file.pick(a.out, "out")?.unwrap_or_else(|| default_table(&form));
    let cfg = ScanConfig { step_base: step, ..ScanConfig::default() };

    let (mut covered, old) = if resume && path.exists() {
        let (meta, zs) = read_zero_table(&path)?;
        if meta.form != form.to_string() {
            return Err(Error::InvalidArgument(format!(
                "table {} belongs to form {}, not {form}",
                path.display(),
                meta.form
            )));
        }
        (meta.covered, zs)
    } else {
        (Vec::new(), Vec::new())
    };
    let parts = uncovered(t0, t1, &covered);
    let scanned = match precision {
        Precision::F32 => scan_with::<f32>(form, &parts, &cfg)?,
        Precision::F64 => scan_with::<f64>(form, &parts, &cfg)?,
    };
    let merged = merge_zeros(&old, &scanned.zeros, MERGE_TOL);
    covered.push([t0, t1]);
    covered = merge_intervals(covered);
    let range = [covered[0][0], covered[covered.len() - 1][1]];
    let prediction = |t: f64| if t >= 3.0 { stark_prediction(&form, t).ok().map(|p| p.main) } else { None };
    let meta = ZeroTableMeta {
        schema: SCHEMA_VERSION,
        form: form.to_string(),
        range,
        covered: covered.clone(),
        step_base: step,
        count: merged.len(),
        stark_prediction: prediction(range[1]),
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    write_zero_table(&path, &meta, &merged)?;

    let in_range = merged.iter().filter(|z| z.t >= t0 && z.t <= t1).count();
    let expected = match (prediction(t1), prediction(t0)) {
        (Some(hi), lo) => Some(hi - lo.unwrap_or(0.0).max(0.0)),
        _ => None,
    };
    print(&json!({
        "schema": SCHEMA_VERSION,
        "form": form.to_string(),
        "range": [t0, t1],
        "count": in_range,
        "stark_prediction": expected,
        "stark_deviation": expected.map(|e| in_range as f64 - e),
        "stark_error_scale": (t1 >= 3.0).then(|| stark_error_weight(t1 + 3.0)),
        "new_zeros": merged.len() - old.len(),
        "table_count": merged.len(),
        "covered": covered,
        "evaluations": scanned.evaluations,
        "warnings": scanned.warnings,
        "table": path.display().to_string(),
    }))?;
    Ok(0)
}

fn load_table(path: &Path, form: &QuadraticForm) -> Result<(ZeroTableMeta, Vec<ZeroRecord<f64>>)> {
    if !path.exists() {
        return Err(Error::InvalidArgument(format!("no zero table at {}; run `zeros` first", path.display())));
    }
    let (meta, zs) = read_zero_table(path)?;
    if meta.form != form.to_string() {
        return Err(Error::InvalidArgument(format!("table {} belongs to form {}", path.display(), meta.form)));
    }
    Ok((meta, zs))
}

pub fn gaps(a: GapsArgs, file: &FileConfig) -> Result<u8> {
    let form = form_arg(a.form, file)?;
    let t = required(file.pick(a.t, "T")?, "T")?;
    let vs = parse_v_list(&file.pick(a.v, "V")?.unwrap_or_else(|| "0.5,1,2,4".into()))?;
    let path = file.pick(a.table, "table")?.unwrap_or_else(|| default_table(&form));
    let (meta, zs) = load_table(&path, &form)?;
    if t.is_nan() || t <= 0.0 || !meta.covers(0.0, t) {
        return Err(Error::InvalidArgument(format!(
            "table {} covers {:?}, which does not contain [0, {t}]",
            path.display(),
            meta.covered
        )));
    }
    let table = GapTable::new(form, t, zs)?;
    let mut pass = true;
    let rows: Vec<Value> = vs
        .iter()
        .map(|&v| {
            let r = table.count_at_least(v)?;
            let bound = 10.0 * t * t.ln() / (v * v);
            let ok = (r as f64) <= bound && (r as f64) * v <= t + v;
            pass &= ok;
            Ok(json!({ "V": v, "R": r, "bound": bound, "trivial_bound": (t + v) / v, "pass": ok }))
        })
        .collect::<Result<_>>()?;
    print(&json!({
        "schema": SCHEMA_VERSION,
        "form": form.to_string(),
        "T": t,
        "zeros": table.zeros().len(),
        "max_gap": table.max_gap(),
        "rows": rows,
        "pass": pass,
    }))?;
    Ok(if pass { 0 } else { 1 })
}

pub fn verify(a: VerifyArgs, file: &FileConfig) -> Result<u8> {
    let mut opts = VerifyOptions::default();
    if let Some(f) = file.pick(a.form, "form")? {
        opts.form = f.parse()?;
    }
    if let Some(seed) = file.pick(a.seed, "seed")? {
        opts.seed = seed;
    }
    let report = run_suite(&a.suite, &opts)?;
    print(&serde_json::to_value(&report)?)?;
    Ok(if report.pass { 0 } else { 1 })
}
