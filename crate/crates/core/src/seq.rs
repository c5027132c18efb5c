//! Littlewood sequences `f_{r,t}` read off a subset, their aperiodic
//! autocorrelations, and merit factors.

use std::sync::Arc;

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sets::{Family, SubsetOfGroup};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeqError {
    #[error("ZeroLength: sequences need t >= 1")]
    ZeroLength,
    #[error("PrecisionLoss: FFT autocorrelation residual {residual} at length {t}")]
    PrecisionLoss { t: usize, residual: f64 },
    #[error("DegenerateDenominator: all off-peak autocorrelations vanish")]
    DegenerateDenominator,
    #[error("Overflow: sum of squared autocorrelations overflowed")]
    Overflow,
    #[error("EmptyGrid: sweep needs nonempty R and T grids")]
    EmptyGrid,
    #[error("BadT: truncation fraction must be positive, got {0}")]
    BadT(f64),
    #[error("BadSymbol: sequence files contain only '+' and '-', found {0:?}")]
    BadSymbol(char),
}

/// Where a sequence came from: `coeffs[j] = 1_D(g^{j+r})` for `j < t`,
/// indices taken mod the period `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: Family,
    pub n: u64,
    pub r: i64,
    pub t: usize,
    pub generator: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LittlewoodSeq {
    coeffs: Vec<i8>,
    provenance: Option<Provenance>,
}

impl LittlewoodSeq {
    /// Wraps raw coefficients; every entry must be +1 or -1.
    pub fn from_coeffs(coeffs: Vec<i8>) -> Self {
        assert!(coeffs.iter().all(|&c| c == 1 || c == -1), "coefficients must be +1/-1");
        LittlewoodSeq { coeffs, provenance: None }
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// One line of `+`/`-`, newline-terminated.
    pub fn to_line(&self) -> String {
        let mut s: String = self.coeffs.iter().map(|&c| if c > 0 { '+' } else { '-' }).collect();
        s.push('\n');
        s
    }

    pub fn parse_line(line: &str) -> Result<Self, SeqError> {
        let coeffs = line
            .trim_end_matches(['\n', '\r'])
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(SeqError::BadSymbol(other)),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        if coeffs.is_empty() {
            return Err(SeqError::ZeroLength);
        }
        Ok(LittlewoodSeq { coeffs, provenance: None })
    }

    pub fn count_plus(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c > 0).count()
    }
}

/// `f_{r,t}`: `t` consecutive values of the +1/-1 indicator of `d`, starting
/// at coordinate `r` (any integer, reduced mod the group order). `t` may
/// exceed the period.
pub fn realize(d: &SubsetOfGroup, r: i64, t: usize) -> Result<LittlewoodSeq, SeqError> {
    if t == 0 {
        return Err(SeqError::ZeroLength);
    }
    let n = d.n() as i64;
    let start = r.rem_euclid(n) as u64;
    let coeffs = (0..t as u64).map(|j| if d.contains(start + j) { 1 } else { -1 }).collect();
    Ok(LittlewoodSeq {
        coeffs,
        provenance: Some(Provenance {
            family: d.family().clone(),
            n: d.n(),
            r,
            t,
            generator: d.generator().0,
        }),
    })
}

/// Exact aperiodic autocorrelations `c_1..c_{t-1}`,
/// `c_u = sum_{j < t-u} a_j a_{j+u}`.
pub fn acf(a: &[i8]) -> Vec<i64> {
    let t = a.len();
    (1..t)
        .map(|u| a[..t - u].iter().zip(&a[u..]).map(|(&x, &y)| (x * y) as i64).sum())
        .collect()
}

/// Same as [`acf`] through a zero-padded FFT, rounded to integers. Fails
/// with `PrecisionLoss` if any raw value is more than 1/4 from an integer.
pub fn acf_fft(a: &[i8]) -> Result<Vec<i64>, SeqError> {
    let (c, residual) = acf_fft_with_residual(a);
    if residual > 0.25 {
        return Err(SeqError::PrecisionLoss { t: a.len(), residual });
    }
    Ok(c)
}

/// FFT autocorrelation together with the largest rounding residual.
pub fn acf_fft_with_residual(a: &[i8]) -> (Vec<i64>, f64) {
    let t = a.len();
    if t < 2 {
        return (Vec::new(), 0.0);
    }
    let size = (2 * t).next_power_of_two();
    let mut planner = FftPlanner::new();
    let fwd: Arc<dyn Fft<f64>> = planner.plan_fft_forward(size);
    let inv = planner.plan_fft_inverse(size);
    let mut buf = vec![Complex64::new(0.0, 0.0); size];
    for (slot, &x) in buf.iter_mut().zip(a) {
        slot.re = x as f64;
    }
    fwd.process(&mut buf);
    for z in buf.iter_mut() {
        *z = Complex64::new(z.norm_sqr(), 0.0);
    }
    inv.process(&mut buf);
    let scale = size as f64;
    let mut residual = 0.0f64;
    let c = buf[1..t]
        .iter()
        .map(|z| {
            let raw = z.re / scale;
            let rounded = raw.round();
            residual = residual.max((raw - rounded).abs());
            rounded as i64
        })
        .collect();
    (c, residual)
}

const FFT_THRESHOLD: usize = 512;

/// Exact autocorrelation, through the FFT for long sequences with a fallback
/// to direct summation if rounding is not trustworthy.
pub fn autocorrelation(a: &[i8]) -> Vec<i64> {
    if a.len() <= FFT_THRESHOLD {
        return acf(a);
    }
    acf_fft(a).unwrap_or_else(|_| acf(a))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeritReport {
    pub t: usize,
    /// `sum_{u=1}^{t-1} c_u^2`, exact.
    pub sum_sq_acf: u128,
    /// `t^2 / (2 sum_sq_acf)`.
    pub merit_factor: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acf: Option<Vec<i64>>,
}

fn sum_squares(c: &[i64]) -> Result<u128, SeqError> {
    c.iter().try_fold(0u128, |acc, &x| {
        acc.checked_add((x as i128 * x as i128) as u128).ok_or(SeqError::Overflow)
    })
}

/// Merit factor `t^2 / (2 sum_{u>=1} c_u^2)`.
pub fn merit_factor(seq: &LittlewoodSeq) -> Result<MeritReport, SeqError> {
    merit_factor_of(seq.coeffs(), false)
}

/// As [`merit_factor`], keeping the autocorrelation profile in the report.
pub fn merit_factor_with_acf(seq: &LittlewoodSeq) -> Result<MeritReport, SeqError> {
    merit_factor_of(seq.coeffs(), true)
}

fn merit_factor_of(a: &[i8], keep: bool) -> Result<MeritReport, SeqError> {
    let t = a.len();
    if t == 0 {
        return Err(SeqError::ZeroLength);
    }
    let c = autocorrelation(a);
    let sum_sq_acf = sum_squares(&c)?;
    if sum_sq_acf == 0 {
        return Err(SeqError::DegenerateDenominator);
    }
    let merit_factor = (t as f64 * t as f64) / (2.0 * sum_sq_acf as f64);
    Ok(MeritReport { t, sum_sq_acf, merit_factor, acf: keep.then_some(c) })
}

/// One cell of a sweep; `merit` is `None` where the denominator vanishes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct SweepRow {
    pub R: f64,
    pub T: f64,
    pub r: i64,
    pub t: usize,
    pub merit: Option<f64>,
}

/// `floor(x + 1/2)`.
pub fn round_half_up(x: f64) -> i64 {
    (x + 0.5).floor() as i64
}

/// Empirical merit factors on the grid `R_grid x T_grid` (R outer, T inner)
/// with `r = round(R n)` and `t = max(1, round(T n))`. Cells run in parallel;
/// rows come back in grid order.
#[allow(non_snake_case)]
pub fn sweep(d: &SubsetOfGroup, R_grid: &[f64], T_grid: &[f64]) -> Result<Vec<SweepRow>, SeqError> {
    if R_grid.is_empty() || T_grid.is_empty() {
        return Err(SeqError::EmptyGrid);
    }
    if let Some(&bad) = T_grid.iter().find(|&&t| !(t > 0.0)) {
        return Err(SeqError::BadT(bad));
    }
    let n = d.n() as f64;
    let cells: Vec<(f64, f64)> = R_grid
        .iter()
        .flat_map(|&r| T_grid.iter().map(move |&t| (r, t)))
        .collect();
    cells
        .par_iter()
        .map(|&(R, T)| {
            let r = round_half_up(R * n);
            let t = round_half_up(T * n).max(1) as usize;
            let seq = realize(d, r, t)?;
            let merit = match merit_factor(&seq) {
                Ok(rep) => Some(rep.merit_factor),
                Err(SeqError::DegenerateDenominator) => None,
                Err(e) => return Err(e),
            };
            Ok(SweepRow { R, T, r, t, merit })
        })
        .collect()
}
