use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use merit_core::asym::{self, MaxResult};
use merit_core::seq::{self, LittlewoodSeq, MeritReport, Provenance};
use merit_core::sets::{self, Ambient, DiffSetCheck};
use merit_core::spectral::{self, PeriodicAcfReport, SpectralReport, LF_MAX};
use serde::Serialize;

use crate::args::{ConstructArgs, DiagnoseArgs, Format, MfArgs, PredictArgs, SweepArgs};
use crate::family::{self, Built};
use crate::fmt::sig;

const SIG_DIGITS: usize = 12;

/// Writes to `out`, or to stdout when absent.
pub fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn realize(built: &Built, r: i64, t: Option<usize>) -> Result<LittlewoodSeq> {
    let t = t.unwrap_or(built.set.n() as usize);
    Ok(seq::realize(&built.set, r, t)?)
}

#[derive(Serialize)]
struct Sidecar<'a> {
    family: &'a str,
    provenance: &'a Provenance,
    length: usize,
    plus_count: usize,
}

pub fn construct(args: &ConstructArgs) -> Result<()> {
    let built = family::build(&args.family)?;
    let seq = realize(&built, args.r, args.t)?;
    let line = seq.to_line();
    match &args.out {
        None => emit(None, &line),
        Some(path) => {
            emit(Some(path), &line)?;
            let sidecar = Sidecar {
                family: built.set.family().name(),
                provenance: seq.provenance().expect("realized sequences carry provenance"),
                length: seq.len(),
                plus_count: seq.count_plus(),
            };
            let mut side = path.as_os_str().to_owned();
            side.push(".json");
            emit(Some(Path::new(&side)), &to_json(&sidecar)?)
        }
    }
}

pub fn mf(args: &MfArgs) -> Result<()> {
    let seq = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let line = text.lines().next().unwrap_or("");
            LittlewoodSeq::parse_line(line)?
        }
        None => realize(&family::build(&args.family)?, args.r, args.t)?,
    };
    let report: MeritReport = if args.acf { seq::merit_factor_with_acf(&seq)? } else { seq::merit_factor(&seq)? };
    emit(args.out.as_deref(), &to_json(&report)?)
}

#[allow(non_snake_case)]
#[derive(Serialize)]
struct SweepRecord {
    R: f64,
    T: f64,
    r: i64,
    t: usize,
    F: Option<f64>,
    phi_pred: Option<f64>,
    abs_err: Option<f64>,
}

pub fn sweep(args: &SweepArgs) -> Result<()> {
    if args.R.is_empty() || args.T.is_empty() {
        bail!("EmptyGrid: --R and --T must both be nonempty");
    }
    let built = family::build(&args.family)?;
    let nu = built.set.family().nu();
    let rows = seq::sweep(&built.set, &args.R, &args.T)?;
    let records: Vec<SweepRecord> = rows
        .into_iter()
        .map(|row| {
            let phi_pred = nu.and_then(|nu| asym::phi(nu, row.R, row.T).ok()).filter(|p| p.is_finite()).map(|p| p.value());
            let abs_err = row.merit.zip(phi_pred).map(|(f, p)| (f - p).abs());
            SweepRecord { R: row.R, T: row.T, r: row.r, t: row.t, F: row.merit, phi_pred, abs_err }
        })
        .collect();
    let text = match args.format {
        Format::Json => to_json(&records)?,
        Format::Csv => {
            let cell = |v: Option<f64>| v.map(|x| sig(x, SIG_DIGITS)).unwrap_or_default();
            let mut s = String::from("R,T,r,t,F,phi_pred,abs_err\n");
            for rec in &records {
                s += &format!(
                    "{},{},{},{},{},{},{}\n",
                    sig(rec.R, SIG_DIGITS),
                    sig(rec.T, SIG_DIGITS),
                    rec.r,
                    rec.t,
                    cell(rec.F),
                    cell(rec.phi_pred),
                    cell(rec.abs_err)
                );
            }
            s
        }
    };
    emit(args.out.as_deref(), &text)
}

#[allow(non_snake_case)]
#[derive(Serialize)]
struct PhiValue {
    R: f64,
    T: f64,
    phi: Option<f64>,
    unbounded: bool,
}

#[derive(Serialize)]
struct Prediction {
    nu: f64,
    optimum: MaxResult,
    values: Vec<PhiValue>,
}

pub fn predict(args: &PredictArgs) -> Result<()> {
    let nu = match (args.nu, args.family.family) {
        (Some(nu), _) => nu,
        (None, Some(_)) => {
            let built = family::build(&args.family)?;
            match built.set.family().nu() {
                Some(nu) => nu,
                None => bail!("NoNu: family {} has no limiting parameter", built.set.family().name()),
            }
        }
        (None, None) => bail!("MissingParameter: give --nu or a --family"),
    };
    let optimum = asym::phi_max(nu)?;
    let mut values = Vec::new();
    for &r in &args.R {
        for &t in &args.T {
            let v = asym::phi(nu, r, t)?;
            values.push(PhiValue { R: r, T: t, phi: v.is_finite().then(|| v.value()), unbounded: !v.is_finite() });
        }
    }
    emit(args.out.as_deref(), &to_json(&Prediction { nu, optimum, values })?)
}

#[derive(Serialize)]
struct Diagnosis {
    family: String,
    n: u64,
    k: u64,
    nu: Option<f64>,
    diff_check: DiffSetCheck,
    /// Largest deviation of `|chi(D)|^2` from the difference-set value.
    char_value_deviation: f64,
    /// Present when the period is at most the L_f size limit.
    spectral: Option<SpectralReport>,
    /// Present for subsets of a prime field's additive group.
    profile: Option<PeriodicAcfReport>,
}

pub fn diagnose(args: &DiagnoseArgs) -> Result<()> {
    let built = family::build(&args.family)?;
    let d = &built.set;
    let spectral = match spectral::default_model(d.family()) {
        Some(model) if d.n() as usize <= LF_MAX => {
            Some(spectral::lf_deviation(&seq::realize(d, 0, d.n() as usize)?, model, args.exclude_origin)?)
        }
        _ => None,
    };
    let profile = match (d.ambient(), d.family()) {
        (Ambient::Additive { .. }, sets::Family::Cyclotomic { m, .. }) => Some(spectral::periodic_profile(&built.field, d, *m)?),
        _ => None,
    };
    let report = Diagnosis {
        family: d.family().name().to_string(),
        n: d.n(),
        k: d.k(),
        nu: d.family().nu(),
        diff_check: sets::diff_check(d)?,
        char_value_deviation: sets::char_value_check(d),
        spectral,
        profile,
    };
    emit(args.out.as_deref(), &to_json(&report)?)
}
