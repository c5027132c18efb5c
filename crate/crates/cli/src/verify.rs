//! Verification suites. Each produces a list of named checks; the command
//! exits 1 if any fails.

use anyhow::{bail, Result};
use merit_core::charsums::{self, CharSumError};
use merit_core::ff::primes::{is_prime, prime_power};
use merit_core::seq;
use merit_core::sets::{self, Family, SubsetOfGroup};
use merit_core::spectral::{self, Table, LF_MAX};
use merit_core::{FieldCtx, MultChar};
use serde::Serialize;

use crate::args::{FamilyArgs, Suite, VerifyArgs};
use crate::family;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

pub fn run(args: &VerifyArgs) -> Result<VerifyReport> {
    let checks = match args.suite {
        Suite::Charsums => charsums_suite(args.qmax)?,
        Suite::Sets => sets_suite(&args.family)?,
        Suite::Tables => tables_suite(args.family.m, &args.primes)?,
        Suite::Spectral => spectral_suite(&args.family, args.exclude_origin)?,
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { suite: args.suite, pass, checks })
}

fn charsums_suite(qmax: u64) -> Result<Vec<Check>> {
    if qmax < 2 {
        bail!("BadQmax: need --qmax >= 2");
    }
    if qmax > charsums::KATZ_MAX {
        bail!("BadQmax: --qmax is limited to {}", charsums::KATZ_MAX);
    }
    let mut out = Vec::new();
    for q in (2..=qmax).filter(|&q| prime_power(q).is_some()) {
        let ctx = FieldCtx::with_order(q)?;
        let r = charsums::identity_suite(&ctx)?;
        out.push(check(
            format!("identities GF({q})"),
            r.passed(),
            format!("{} checks, max error {:.3e}{}", r.checks, r.max_err, if r.passed() { String::new() } else { format!(", {:?}", r.failures) }),
        ));
        if q > 3 {
            // A fixed small panel: |sum_chi G(chi xi) conj(G(chi xi^2))| and a
            // three-factor variant.
            let table = charsums::gauss_table(&ctx)?;
            for (alphas, betas) in [(vec![MultChar(1)], vec![MultChar(2)]), (vec![MultChar(1), MultChar(2)], vec![MultChar(3)])] {
                match charsums::katz_check(&table, &alphas, &betas) {
                    Ok(k) => out.push(check(
                        format!("Katz GF({q}) {:?}/{:?}", alphas.iter().map(|c| c.0).collect::<Vec<_>>(), betas.iter().map(|c| c.0).collect::<Vec<_>>()),
                        k.holds(),
                        format!("{:.6} <= {:.6}", k.lhs, k.bound),
                    )),
                    Err(CharSumError::PermutedMultisets) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(out)
}

/// What a family's difference statistics should look like, if known.
fn expectation(d: &SubsetOfGroup) -> Option<bool> {
    match d.family() {
        Family::Gmw { .. } => Some(true),
        Family::Sidelnikov { .. } => Some(false),
        Family::Cyclotomic { p, m: 2, .. } if p % 4 == 3 => Some(true),
        Family::Cyclotomic { p, m: 6, classes } if sets::is_hall_prime(*p) && (classes == &[0, 1, 3] || classes == &[0, 1, 4]) => {
            Some(true)
        }
        _ => None,
    }
}

fn set_check(label: &str, d: &SubsetOfGroup) -> Result<Check> {
    let c = sets::diff_check(d)?;
    let char_dev = sets::char_value_check(d);
    let char_says = char_dev < 1e-6 * d.n() as f64;
    let mut pass = char_says == c.is_difference_set;
    let mut detail = format!(
        "n={} k={} lambda in [{}, {}], difference set: {}, character deviation {char_dev:.3e}",
        c.n, c.k, c.lambda_min, c.lambda_max, c.is_difference_set
    );
    if let Some(expected) = expectation(d) {
        pass &= expected == c.is_difference_set;
        detail += &format!(", expected difference set: {expected}");
    }
    if let Family::Sidelnikov { q } = d.family() {
        pass &= c.k == (q - 1) / 2;
    }
    Ok(check(label, pass, detail))
}

fn sets_suite(family_args: &FamilyArgs) -> Result<Vec<Check>> {
    if family_args.family.is_some() {
        let built = family::build(family_args)?;
        let label = built.set.family().name().to_string();
        return Ok(vec![set_check(&label, &built.set)?]);
    }
    let mut out = Vec::new();
    for p in [7u64, 11, 19, 23, 31, 43, 13, 17] {
        out.push(set_check(&format!("paley p={p}"), &sets::build_paley(&FieldCtx::prime(p)?)?)?);
    }
    for p in [31u64, 43, 127] {
        out.push(set_check(&format!("hall p={p}"), &sets::build_hall(&FieldCtx::prime(p)?)?)?);
    }
    for q in [8u64, 16, 32, 64, 128, 256] {
        out.push(set_check(&format!("singer q={q}"), &sets::build_singer(&FieldCtx::with_order(q)?)?)?);
    }
    for (q, s) in [(16u64, 4u64), (64, 8), (256, 16), (1024, 32)] {
        let inner = sets::build_singer(&FieldCtx::with_order(s)?)?;
        out.push(set_check(&format!("gmw q={q} s={s}"), &sets::build_gmw(&FieldCtx::with_order(q)?, s, &inner)?)?);
    }
    for q in [27u64, 81, 103, 125] {
        out.push(set_check(&format!("sidelnikov q={q}"), &sets::build_sidelnikov(&FieldCtx::with_order(q)?)?)?);
    }
    Ok(out)
}

fn table_for(p: u64, m: u32) -> Result<Table> {
    match m {
        4 => Ok(Table::Quartic),
        6 if (p - 1).is_multiple_of(6) && ((p - 1) / 6) % 2 == 1 => Ok(Table::SexticOdd),
        6 => Ok(Table::SexticEven),
        _ => bail!("BadM: the tables cover m = 4 and m = 6, got {m}"),
    }
}

fn tables_suite(m: Option<u32>, primes: &[u64]) -> Result<Vec<Check>> {
    let orders = match m {
        Some(m) => vec![m],
        None => vec![4, 6],
    };
    let mut out = Vec::new();
    for m in orders {
        let chosen: Vec<u64> = if primes.is_empty() { default_table_primes(m)? } else { primes.to_vec() };
        for &p in &chosen {
            let table = table_for(p, m)?;
            let name = format!("table {} p={p}", table.number());
            match spectral::table_check(p, table) {
                Ok(t) => {
                    let sign = t.y_sign.map_or("none".to_string(), |s| if s > 0 { "+".into() } else { "-".into() });
                    out.push(check(name, t.pass(), format!("x={} y={} sign of y matched: {sign}", t.x, t.y)));
                }
                Err(e) => out.push(check(name, false, e.to_string())),
            }
        }
    }
    Ok(out)
}

/// Five primes for each column of the requested tables.
fn default_table_primes(m: u32) -> Result<Vec<u64>> {
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(), Vec::new()];
    let mut p = 5;
    while buckets.iter().any(|b| b.len() < 5) {
        if is_prime(p) {
            let slot = match m {
                4 if p % 4 == 1 => Some(((p - 1) / 4 % 2) as usize),
                6 => match spectral::table_check(p, table_for(p, 6)?) {
                    Ok(_) => Some(((p - 1) / 6 % 2) as usize),
                    Err(_) => None,
                },
                4 => None,
                _ => bail!("BadM: the tables cover m = 4 and m = 6, got {m}"),
            };
            if let Some(s) = slot {
                if buckets[s].len() < 5 {
                    buckets[s].push(p);
                }
            }
        }
        p += 1;
    }
    let mut all: Vec<u64> = buckets.concat();
    all.sort_unstable();
    Ok(all)
}

fn spectral_check(label: &str, d: &SubsetOfGroup, exclude_origin: Option<bool>) -> Result<Check> {
    if d.n() as usize > LF_MAX {
        bail!("TooLarge: spectral checks need a period of at most {LF_MAX}, got {}", d.n());
    }
    let Some(model) = spectral::default_model(d.family()) else {
        bail!("NoModel: family {} has no comparison model", d.family().name());
    };
    let r = spectral::lf_deviation(&seq::realize(d, 0, d.n() as usize)?, model, exclude_origin)?;
    let detail = match r.bound {
        Some(b) => format!("max_dev {:.6} at {:?}, bound {:.6}", r.max_dev, r.argmax, b),
        None => format!("max_dev {:.6} at {:?}, no bound for this family", r.max_dev, r.argmax),
    };
    Ok(check(label, r.within_bound().unwrap_or(true), detail))
}

fn spectral_suite(family_args: &FamilyArgs, exclude_origin: Option<bool>) -> Result<Vec<Check>> {
    if family_args.family.is_some() {
        let built = family::build(family_args)?;
        let label = built.set.family().name().to_string();
        return Ok(vec![spectral_check(&label, &built.set, exclude_origin)?]);
    }
    let mut out = Vec::new();
    out.push(spectral_check("singer q=16", &sets::build_singer(&FieldCtx::with_order(16)?)?, exclude_origin)?);
    let inner = sets::build_singer(&FieldCtx::with_order(4)?)?;
    out.push(spectral_check("gmw q=16 s=4", &sets::build_gmw(&FieldCtx::with_order(16)?, 4, &inner)?, exclude_origin)?);
    out.push(spectral_check("sidelnikov q=27", &sets::build_sidelnikov(&FieldCtx::with_order(27)?)?, exclude_origin)?);
    out.push(spectral_check("paley p=13", &sets::build_paley(&FieldCtx::prime(13)?)?, exclude_origin)?);
    out.push(spectral_check("hall p=31", &sets::build_hall(&FieldCtx::prime(31)?)?, exclude_origin)?);
    Ok(out)
}
