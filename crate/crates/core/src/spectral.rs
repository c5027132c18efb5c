//! Four-fold correlations of a sequence's values on the unit circle, their
//! distance from the idealized models `I + nu J` and `I + K`, and the
//! periodic intersection profiles of cyclotomic unions.

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

use crate::ff::primes::{is_prime, represent_quadratic_form};
use crate::ff::{FieldCtx, FieldElem, FieldError};
use crate::seq::LittlewoodSeq;
use crate::sets::{self, Ambient, Family, SetError, SubsetOfGroup};

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("TooLarge: length {n} exceeds {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("ZeroLength: empty sequence")]
    ZeroLength,
    #[error("OddLength: the I+K model needs an even length, got {0}")]
    OddLength(usize),
    #[error("NotAdditive: periodic profiles need a subset of the additive group of GF(p)")]
    NotAdditive,
    #[error("NotClassConstant: intersection counts vary inside class {class}")]
    NotClassConstant { class: u32 },
    #[error("BadM: {0}")]
    BadM(u32),
    #[error("NotPrime: {0}")]
    NotPrime(u64),
    #[error("WrongForm: {p} is not of the form {form}")]
    WrongForm { p: u64, form: &'static str },
    #[error("WrongParity: (p-1)/6 = {quotient} has the wrong parity for table {table}")]
    WrongParity { quotient: u64, table: u8 },
    #[error("BadTable: {0}")]
    BadTable(u8),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// Largest length accepted by the L_f routines.
pub const LF_MAX: usize = 512;

/// The indicator functions `I_n`, `J_n` and (for even `n`) `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ijk {
    pub i: u8,
    pub j: u8,
    pub k: Option<u8>,
}

pub fn ijk(n: u64, a: i64, b: i64, c: i64) -> Ijk {
    let m = n as i64;
    let (a, b, c) = (a.rem_euclid(m), b.rem_euclid(m), c.rem_euclid(m));
    let i = ((c == a && b == 0) || (b == a && c == 0)) as u8;
    let j = (a == 0 && b == c && b != 0) as u8;
    let k = n.is_multiple_of(2).then(|| {
        let h = m / 2;
        (a == h && b == (c + h) % m && b != 0 && c != 0) as u8
    });
    Ijk { i, j, k }
}

/// Values of `f` at the `n`-th roots of unity: `F_k = sum_j a_j e^{2 pi i jk/n}`.
pub fn unit_circle_values(coeffs: &[i8]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = coeffs.iter().map(|&a| Complex64::new(a as f64, 0.0)).collect();
    FftPlanner::new().plan_fft_inverse(buf.len()).process(&mut buf);
    buf
}

struct Slabs {
    n: usize,
    values: Vec<Complex64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Slabs {
    fn new(coeffs: &[i8]) -> Self {
        let n = coeffs.len();
        let mut planner = FftPlanner::new();
        Slabs { n, values: unit_circle_values(coeffs), fwd: planner.plan_fft_forward(n), inv: planner.plan_fft_inverse(n) }
    }

    /// All `L_f(a, b, c)` for fixed `a`, laid out as `out[b * n + c]`.
    ///
    /// For each `b`, with `g_k = F_k F_{k+a} conj(F_{k+b})`, the `c`-slice is
    /// `conj(sum_k conj(g_k) F_{k+c})`, a cyclic cross-correlation. The DFT
    /// of `F` is `n` times the coefficient vector, so one forward and one
    /// inverse transform per `b` suffice.
    fn slab(&self, a: usize, out: &mut [Complex64]) {
        let n = self.n;
        let f = &self.values;
        let scale = 1.0 / (n as f64).powi(4);
        let mut g = vec![Complex64::new(0.0, 0.0); n];
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.fwd.get_inplace_scratch_len().max(self.inv.get_inplace_scratch_len())];
        // DFT of F, i.e. n * a_l.
        let mut spectrum = f.clone();
        self.fwd.process_with_scratch(&mut spectrum, &mut scratch);
        for b in 0..n {
            for k in 0..n {
                g[k] = f[k] * f[(k + a) % n] * f[(k + b) % n].conj();
            }
            self.fwd.process_with_scratch(&mut g, &mut scratch);
            for (gl, sl) in g.iter_mut().zip(&spectrum) {
                *gl = gl.conj() * sl;
            }
            self.inv.process_with_scratch(&mut g, &mut scratch);
            // Inverse transform is unnormalized: one factor 1/n here, 1/n^3 for L.
            for (c, h) in g.iter().enumerate() {
                out[b * n + c] = h.conj() * scale;
            }
        }
    }
}

fn check_len(n: usize) -> Result<(), SpectralError> {
    if n == 0 {
        return Err(SpectralError::ZeroLength);
    }
    if n > LF_MAX {
        return Err(SpectralError::TooLarge { n, limit: LF_MAX });
    }
    Ok(())
}

/// The full tensor `L_f(a, b, c)`, stored as `values[(a * n + b) * n + c]`.
#[derive(Debug, Clone)]
pub struct LfTensor {
    n: usize,
    values: Vec<Complex64>,
}

impl LfTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Complex64 {
        let n = self.n;
        self.values[((a % n) * n + b % n) * n + c % n]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }
}

/// `L_f(a,b,c) = n^{-3} sum_k F_k F_{k+a} conj(F_{k+b}) conj(F_{k+c})` for
/// every triple. Memory is `16 n^3` bytes; prefer [`lf_deviation`] when
/// only the extremal deviation is needed.
pub fn lf_full(seq: &LittlewoodSeq) -> Result<LfTensor, SpectralError> {
    let n = seq.len();
    check_len(n)?;
    let slabs = Slabs::new(seq.coeffs());
    let mut values = vec![Complex64::new(0.0, 0.0); n * n * n];
    values.par_chunks_mut(n * n).enumerate().for_each(|(a, out)| slabs.slab(a, out));
    Ok(LfTensor { n, values })
}

/// Direct quadruple sum for one triple.
pub fn lf_direct(coeffs: &[i8], a: usize, b: usize, c: usize) -> Complex64 {
    let n = coeffs.len();
    let f: Vec<Complex64> = (0..n)
        .map(|k| {
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &x)| x as f64 * crate::ff::root_of_unity((j * k % n) as u64, n as u64))
                .sum()
        })
        .collect();
    let sum: Complex64 = (0..n).map(|k| f[k] * f[(k + a) % n] * (f[(k + b) % n] * f[(k + c) % n]).conj()).sum();
    sum / (n as f64).powi(3)
}

/// Idealized model for `L_f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// `I_n + nu J_n`.
    IPlusNuJ(f64),
    /// `I_n + K_n`; even `n` only.
    IPlusK,
}

impl Model {
    pub fn tag(&self) -> &'static str {
        match self {
            Model::IPlusNuJ(_) => "I+nuJ",
            Model::IPlusK => "I+K",
        }
    }

    pub fn nu(&self) -> Option<f64> {
        match self {
            Model::IPlusNuJ(nu) => Some(*nu),
            Model::IPlusK => None,
        }
    }

    fn value(&self, n: u64, a: usize, b: usize, c: usize) -> f64 {
        let w = ijk(n, a as i64, b as i64, c as i64);
        match self {
            Model::IPlusNuJ(nu) => w.i as f64 + nu * w.j as f64,
            Model::IPlusK => (w.i + w.k.unwrap_or(0)) as f64,
        }
    }
}

/// Model a family is compared against: `I + K` for Sidelnikov sets,
/// `I + nu J` with the family's `nu` otherwise.
pub fn default_model(family: &Family) -> Option<Model> {
    match family {
        Family::Sidelnikov { .. } => Some(Model::IPlusK),
        other => other.nu().map(Model::IPlusNuJ),
    }
}

/// Proven bound on `|L_f - model|` for the family, where one is known.
pub fn family_bound(family: &Family) -> Option<f64> {
    match family {
        Family::Gmw { q, .. } => {
            let q = *q as f64;
            Some(2.0 * q.powf(2.5) / (q - 1.0).powi(3))
        }
        Family::Sidelnikov { q } => {
            let q = *q as f64;
            Some(23.0 * q.powf(2.5) / (q - 1.0).powi(3))
        }
        Family::Cyclotomic { p, m, .. } => Some(18.0 * ((*m - 1) as f64).powi(4) / (*p as f64).sqrt()),
        _ => None,
    }
}

/// The origin is outside the cyclotomic bound's scope, inside the others'.
pub fn default_exclude_origin(family: &Family) -> bool {
    matches!(family, Family::Cyclotomic { .. })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub family: String,
    pub n: usize,
    pub model: String,
    pub nu: Option<f64>,
    pub max_dev: f64,
    pub argmax: [usize; 3],
    pub bound: Option<f64>,
    /// `(ln n)^3 * max_dev`.
    pub condition_value: f64,
    pub origin_excluded: bool,
    /// Largest `|Im L_f|` seen; `L_f` is complex in general.
    pub max_imag: f64,
}

impl SpectralReport {
    /// Whether `max_dev` respects the bound (with 1e-6 slack); `None` when
    /// the family has no bound.
    pub fn within_bound(&self) -> Option<bool> {
        self.bound.map(|b| self.max_dev <= b + 1e-6)
    }
}

#[derive(Clone, Copy)]
struct Extremum {
    dev: f64,
    at: [usize; 3],
    imag: f64,
}

impl Extremum {
    /// Strict comparison keeps the earliest triple on ties.
    fn merge(self, later: Extremum) -> Extremum {
        let mut out = if later.dev > self.dev { later } else { self };
        out.imag = self.imag.max(later.imag);
        out
    }
}

/// Largest `|L_f(a,b,c) - model(a,b,c)|` over all triples, streamed one
/// `a`-slab at a time. `exclude_origin = None` picks the family default.
/// The result does not depend on the thread count: ties go to the
/// lexicographically smallest triple.
pub fn lf_deviation(seq: &LittlewoodSeq, model: Model, exclude_origin: Option<bool>) -> Result<SpectralReport, SpectralError> {
    let n = seq.len();
    check_len(n)?;
    if model == Model::IPlusK && n % 2 == 1 {
        return Err(SpectralError::OddLength(n));
    }
    let family = seq.provenance().map(|p| &p.family);
    let exclude = exclude_origin.unwrap_or_else(|| family.is_some_and(default_exclude_origin));
    let slabs = Slabs::new(seq.coeffs());
    let slab_max: Vec<Extremum> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut out = vec![Complex64::new(0.0, 0.0); n * n];
            slabs.slab(a, &mut out);
            let mut best = Extremum { dev: -1.0, at: [a, 0, 0], imag: 0.0 };
            for b in 0..n {
                for c in 0..n {
                    let v = out[b * n + c];
                    best.imag = best.imag.max(v.im.abs());
                    if exclude && a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let dev = (v - model.value(n as u64, a, b, c)).norm();
                    if dev > best.dev {
                        best.dev = dev;
                        best.at = [a, b, c];
                    }
                }
            }
            best
        })
        .collect();
    let best = slab_max.into_iter().reduce(Extremum::merge).expect("n >= 1");
    let max_dev = best.dev.max(0.0);
    Ok(SpectralReport {
        family: family.map_or("custom", |f| f.name()).to_string(),
        n,
        model: model.tag().to_string(),
        nu: model.nu(),
        max_dev,
        argmax: best.at,
        bound: family.and_then(family_bound),
        condition_value: (n as f64).ln().powi(3) * max_dev,
        origin_excluded: exclude,
        max_imag: best.imag,
    })
}

/// Intersection profile of a subset `D` of GF(p), grouped by the cyclotomic
/// class of order `m` of the shift.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodicAcfReport {
    pub p: u64,
    pub m: u32,
    /// `values[s] = 4 |(D + u) n D| - (p - 2)` for `u` in class `s`.
    pub values: Vec<i64>,
    /// `16 * sum_{u != 0} (|(D + u) n D| - p/4)^2`, exact.
    pub condition_sum_x16: u128,
    pub condition_sum: f64,
    /// `(ln p)^3 / p^2 * condition_sum`.
    pub scaled: f64,
}

const PROFILE_MAX: u64 = 10_000_000;
const FULL_PROFILE_MAX: u64 = 1 << 20;
/// Shifts sampled per class when the full profile is too large.
const SAMPLES_PER_CLASS: u64 = 8;

fn class_count(d: &SubsetOfGroup, p: u64, u: u64) -> u64 {
    (0..p).filter(|&x| d.contains(x) && d.contains(x + p - u)).count() as u64
}

/// Profile of `D` over GF(p) with classes of order `m` taken with respect to
/// the field's pinned generator. Up to 2^20 every shift is counted and the
/// per-class constancy asserted exhaustively; above that a few shifts per
/// class are counted and constancy is checked on those.
pub fn periodic_profile(ctx: &FieldCtx, d: &SubsetOfGroup, m: u32) -> Result<PeriodicAcfReport, SpectralError> {
    let p = match d.ambient() {
        Ambient::Additive { order } if ctx.degree() == 1 && order == ctx.order() => order,
        _ => return Err(SpectralError::NotAdditive),
    };
    if m == 0 || (p - 1) % m as u64 != 0 {
        return Err(SpectralError::BadM(m));
    }
    if p > PROFILE_MAX {
        return Err(SpectralError::Set(SetError::TooLarge { n: p, limit: PROFILE_MAX }));
    }
    let mut values: Vec<Option<i64>> = vec![None; m as usize];
    let mut record = |u: u64, count: u64| -> Result<(), SpectralError> {
        let class = (ctx.dlog(FieldElem(u as u32)).expect("u != 0") % m as u64) as usize;
        let r = 4 * count as i64 - (p as i64 - 2);
        match values[class] {
            None => values[class] = Some(r),
            Some(prev) if prev != r => return Err(SpectralError::NotClassConstant { class: class as u32 }),
            _ => {}
        }
        Ok(())
    };
    if p <= FULL_PROFILE_MAX {
        let counts = sets::intersection_counts(d)?;
        for (u, &c) in counts.iter().enumerate().skip(1) {
            record(u as u64, c)?;
        }
    } else {
        let h = (p - 1) / m as u64;
        let stride = (h / SAMPLES_PER_CLASS).max(1);
        for s in 0..m as u64 {
            for j in 0..SAMPLES_PER_CLASS.min(h) {
                let u = ctx.exp_of(s + m as u64 * j * stride).0 as u64;
                record(u, class_count(d, p, u))?;
            }
        }
    }
    let values: Vec<i64> = values.into_iter().map(|v| v.expect("every class is nonempty")).collect();
    // 4c - p = R_u - 2, and each class has (p-1)/m shifts.
    let h = ((p - 1) / m as u64) as u128;
    let condition_sum_x16: u128 = values.iter().map(|&r| ((r - 2) * (r - 2)) as u128 * h).sum();
    let condition_sum = condition_sum_x16 as f64 / 16.0;
    let pf = p as f64;
    Ok(PeriodicAcfReport { p, m, values, condition_sum_x16, condition_sum, scaled: pf.ln().powi(3) / (pf * pf) * condition_sum })
}

/// One of the three tabulated families of profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Table {
    /// `C_0 u C_1` of order four, `p = x^2 + 4y^2`.
    Quartic,
    /// Three classes of order six, `p = x^2 + 27y^2`, `(p-1)/6` odd.
    SexticOdd,
    /// Three classes of order six, `p = x^2 + 27y^2`, `(p-1)/6` even.
    SexticEven,
}

impl Table {
    pub fn from_number(t: u8) -> Result<Table, SpectralError> {
        match t {
            1 => Ok(Table::Quartic),
            2 => Ok(Table::SexticOdd),
            3 => Ok(Table::SexticEven),
            _ => Err(SpectralError::BadTable(t)),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Table::Quartic => 1,
            Table::SexticOdd => 2,
            Table::SexticEven => 3,
        }
    }

    pub fn m(self) -> u32 {
        match self {
            Table::Quartic => 4,
            _ => 6,
        }
    }
}

/// Expected values as `(constant, coefficient of y)` per class, for each
/// class set of the table. The quartic table depends on the parity of
/// `(p-1)/4`.
#[allow(clippy::type_complexity)]
fn expected_rows(table: Table, quotient_even: bool) -> Vec<(Vec<u32>, Vec<(i64, i64)>)> {
    match table {
        Table::Quartic if quotient_even => vec![(vec![0, 1], vec![(-3, 2), (-3, -2), (1, 2), (1, -2)])],
        Table::Quartic => vec![(vec![0, 1], vec![(-1, -2), (-1, 2), (-1, -2), (-1, 2)])],
        Table::SexticOdd => vec![
            (vec![0, 1, 2], vec![(-1, 8), (-1, 0), (-1, -8), (-1, 8), (-1, 0), (-1, -8)]),
            (vec![0, 1, 3], vec![(-3, 2), (-1, 0), (1, -2), (-3, 2), (-1, 0), (1, -2)]),
            (vec![0, 2, 3], vec![(-3, -2), (1, 2), (-1, 0), (-3, -2), (1, 2), (-1, 0)]),
        ],
        Table::SexticEven => vec![
            (vec![0, 1, 2], vec![(-3, 8), (-3, 0), (-3, -8), (1, 8), (1, 0), (1, -8)]),
            (vec![0, 1, 3], vec![(-3, 6), (-3, -4), (1, 2), (-3, -2), (1, 4), (1, -6)]),
            (vec![0, 2, 3], vec![(-3, 2), (1, -2), (-3, 4), (-3, -6), (1, 6), (1, -4)]),
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub classes: Vec<u32>,
    pub measured: Vec<i64>,
    /// Expected values with `+y`.
    pub expected_plus: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableCheck {
    pub p: u64,
    pub table: u8,
    pub x: u64,
    pub y: u64,
    /// `Some(+1)` or `Some(-1)` for the sign of `y` that reproduces every
    /// row, `None` if neither does.
    pub y_sign: Option<i8>,
    pub rows: Vec<TableRow>,
}

impl TableCheck {
    pub fn pass(&self) -> bool {
        self.y_sign.is_some()
    }
}

/// Compares the measured profiles of the table's class unions with the
/// tabulated values, trying both signs of `y` (which is only determined up
/// to sign) and requiring one sign to fit every row.
pub fn table_check(p: u64, table: Table) -> Result<TableCheck, SpectralError> {
    if !is_prime(p) {
        return Err(SpectralError::NotPrime(p));
    }
    let (c, form) = match table {
        Table::Quartic => (4, "x^2 + 4y^2"),
        _ => (27, "x^2 + 27y^2"),
    };
    let (x, y) = represent_quadratic_form(p, c)
        .filter(|&(_, y)| y > 0 && p > 2)
        .ok_or(SpectralError::WrongForm { p, form })?;
    let m = table.m();
    let quotient = (p - 1) / m as u64;
    match table {
        Table::SexticOdd if quotient.is_multiple_of(2) => return Err(SpectralError::WrongParity { quotient, table: 2 }),
        Table::SexticEven if quotient % 2 == 1 => return Err(SpectralError::WrongParity { quotient, table: 3 }),
        _ => {}
    }
    let ctx = FieldCtx::prime(p)?;
    let yi = y as i64;
    let mut rows = Vec::new();
    let mut fits = [true, true];
    for (classes, coeffs) in expected_rows(table, quotient.is_multiple_of(2)) {
        let d = sets::build_cyclotomic(&ctx, m, &classes)?;
        let measured = periodic_profile(&ctx, &d, m)?.values;
        for (slot, sign) in fits.iter_mut().zip([1i64, -1]) {
            *slot &= measured.iter().zip(&coeffs).all(|(&v, &(a, b))| v == a + b * sign * yi);
        }
        let expected_plus = coeffs.iter().map(|&(a, b)| a + b * yi).collect();
        rows.push(TableRow { classes, measured, expected_plus });
    }
    let y_sign = if fits[0] {
        Some(1)
    } else if fits[1] {
        Some(-1)
    } else {
        None
    };
    Ok(TableCheck { p, table: table.number(), x, y, y_sign, rows })
}
