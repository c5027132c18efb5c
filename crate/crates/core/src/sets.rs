//! Difference sets and almost difference sets in cyclic groups.
//!
//! A [`SubsetOfGroup`] lives in a cyclic group of order `n` and is stored as a
//! membership bitset indexed by group coordinate: the exponent `u` of
//! `theta^u` for subsets of a multiplicative group GF(q)^*, or the residue
//! for subsets of an additive group Z/n. In both cases the characteristic
//! sequence is just the bitset read periodically, and differences become
//! differences of coordinates mod `n`.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{primes, FieldCtx, FieldElem, FieldError};
use crate::seq;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SetError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("NotPrimeField: construction needs a prime field, got GF({0})")]
    NotPrimeField(u64),
    #[error("BadModulus: p = {p} is not 1 mod {m}")]
    BadModulus { p: u64, m: u32 },
    #[error("BadM: class order {0} must be even and positive")]
    BadM(u32),
    #[error("BadS: {0}")]
    BadS(String),
    #[error("NotHallPrime: {0} is not of the form x^2 + 27 with (p-1)/6 odd")]
    NotHallPrime(u64),
    #[error("NeitherIsDiffSet: neither C0+C1+C3 nor C0+C1+C4 is a difference set for p = {0}")]
    NeitherIsDiffSet(u64),
    #[error("NotBinaryField: construction needs q = 2^k > 2, got {0}")]
    NotBinaryField(u64),
    #[error("BadB: {0}")]
    BadB(String),
    #[error("EvenCharacteristic: Sidelnikov sets need odd q, got {0}")]
    EvenCharacteristic(u64),
    #[error("TooLarge: group order {n} exceeds {limit}")]
    TooLarge { n: u64, limit: u64 },
    #[error("BadRecord: {0}")]
    BadRecord(String),
}

/// The cyclic group a subset lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "lowercase")]
pub enum Ambient {
    /// GF(q)^*, coordinates are discrete logs.
    Multiplicative { q: u64 },
    /// Z/order, coordinates are residues.
    Additive { order: u64 },
}

impl Ambient {
    pub fn order(&self) -> u64 {
        match *self {
            Ambient::Multiplicative { q } => q - 1,
            Ambient::Additive { order } => order,
        }
    }
}

/// Which construction produced a subset, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    /// Union of the classes `C_s`, `s` in `classes`, of order `m` in GF(p).
    Cyclotomic { p: u64, m: u32, classes: Vec<u32> },
    /// `{ab : Tr_{q,s}(a) = 1, b in B}`.
    Gmw { q: u64, s: u64, inner: Box<Family> },
    Sidelnikov { q: u64 },
    /// `{1}` inside GF(2)^*.
    Trivial,
    /// Complement inside the same group.
    Complement { of: Box<Family> },
    Custom,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclotomic { m: 2, .. } => "paley",
            Family::Cyclotomic { .. } => "cyclotomic",
            Family::Gmw { s: 2, .. } => "singer",
            Family::Gmw { .. } => "gmw",
            Family::Sidelnikov { .. } => "sidelnikov",
            Family::Trivial => "trivial",
            Family::Complement { .. } => "complement",
            Family::Custom => "custom",
        }
    }

    /// Limiting-function parameter `nu` for the family, if the family has one:
    /// 0 for GMW and Sidelnikov sets; for cyclotomic unions, 1 when `(p-1)/m`
    /// is even and `(4N/m - 1)^2` otherwise, where `N` counts ordered pairs of
    /// chosen classes whose indices differ by `m/2`.
    pub fn nu(&self) -> Option<f64> {
        match self {
            Family::Gmw { .. } | Family::Sidelnikov { .. } => Some(0.0),
            Family::Cyclotomic { p, m, classes } => {
                if ((p - 1) / *m as u64).is_multiple_of(2) {
                    return Some(1.0);
                }
                let half = m / 2;
                let pairs = classes
                    .iter()
                    .flat_map(|&a| classes.iter().map(move |&b| (a, b)))
                    .filter(|&(a, b)| (a + m - b) % m == half)
                    .count();
                let x = 4.0 * pairs as f64 / *m as f64 - 1.0;
                Some(x * x)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubsetOfGroup {
    ambient: Ambient,
    /// theta for multiplicative groups, the primitive root omega defining the
    /// classes for cyclotomic subsets of Z/p, `1` otherwise.
    generator: FieldElem,
    members: Vec<bool>,
    family: Family,
}

/// On-disk form: `{family, params, n, generator, members}` with members the
/// sorted coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetRecord {
    pub family: String,
    pub params: Family,
    pub ambient: Ambient,
    pub n: u64,
    pub generator: u32,
    pub members: Vec<u64>,
}

impl SubsetOfGroup {
    pub fn from_members(ambient: Ambient, generator: FieldElem, members: Vec<bool>, family: Family) -> Self {
        assert_eq!(members.len() as u64, ambient.order(), "bitset length must equal group order");
        SubsetOfGroup { ambient, generator, members, family }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn n(&self) -> u64 {
        self.members.len() as u64
    }

    /// Cardinality `|D|`.
    pub fn k(&self) -> u64 {
        self.members.iter().filter(|&&b| b).count() as u64
    }

    pub fn contains(&self, coord: u64) -> bool {
        self.members[(coord % self.n()) as usize]
    }

    pub fn bits(&self) -> &[bool] {
        &self.members
    }

    /// Coordinates of the members, ascending.
    pub fn coords(&self) -> Vec<u64> {
        (0..self.n()).filter(|&u| self.members[u as usize]).collect()
    }

    /// Members as field elements (multiplicative subsets only: `theta^u`).
    pub fn elements(&self, ctx: &FieldCtx) -> Option<Vec<FieldElem>> {
        match self.ambient {
            Ambient::Multiplicative { .. } => {
                let mut v: Vec<_> = self.coords().into_iter().map(|u| ctx.exp_of(u)).collect();
                v.sort();
                Some(v)
            }
            Ambient::Additive { .. } => None,
        }
    }

    pub fn complement(&self) -> SubsetOfGroup {
        SubsetOfGroup {
            ambient: self.ambient,
            generator: self.generator,
            members: self.members.iter().map(|b| !b).collect(),
            family: Family::Complement { of: Box::new(self.family.clone()) },
        }
    }

    pub fn to_record(&self) -> SetRecord {
        SetRecord {
            family: self.family.name().to_string(),
            params: self.family.clone(),
            ambient: self.ambient,
            n: self.n(),
            generator: self.generator.0,
            members: self.coords(),
        }
    }

    pub fn from_record(rec: &SetRecord) -> Result<Self, SetError> {
        if rec.ambient.order() != rec.n {
            return Err(SetError::BadRecord(format!("n = {} but ambient order is {}", rec.n, rec.ambient.order())));
        }
        let mut members = vec![false; rec.n as usize];
        for &u in &rec.members {
            let slot = members
                .get_mut(u as usize)
                .ok_or_else(|| SetError::BadRecord(format!("member {u} out of range")))?;
            *slot = true;
        }
        Ok(SubsetOfGroup {
            ambient: rec.ambient,
            generator: FieldElem(rec.generator),
            members,
            family: rec.params.clone(),
        })
    }
}

fn require_prime_field(ctx: &FieldCtx) -> Result<(), SetError> {
    if ctx.degree() != 1 {
        return Err(SetError::NotPrimeField(ctx.order()));
    }
    Ok(())
}

/// Union of the cyclotomic classes `C_s = omega^s C_0`, `s` in `classes`,
/// of order `m`, as a subset of the additive group of GF(p). `omega` is the
/// field's pinned generator.
pub fn build_cyclotomic(ctx: &FieldCtx, m: u32, classes: &[u32]) -> Result<SubsetOfGroup, SetError> {
    require_prime_field(ctx)?;
    let p = ctx.order();
    if m == 0 || m % 2 == 1 {
        return Err(SetError::BadM(m));
    }
    if !(p - 1).is_multiple_of(m as u64) {
        return Err(SetError::BadModulus { p, m });
    }
    let mut chosen = vec![false; m as usize];
    for &s in classes {
        if s >= m {
            return Err(SetError::BadS(format!("class index {s} out of range for m = {m}")));
        }
        if std::mem::replace(&mut chosen[s as usize], true) {
            return Err(SetError::BadS(format!("class index {s} repeated")));
        }
    }
    if classes.len() != (m / 2) as usize {
        return Err(SetError::BadS(format!("need {} classes for m = {m}, got {}", m / 2, classes.len())));
    }
    let members = (0..p)
        .map(|x| match ctx.dlog(FieldElem(x as u32)) {
            Some(l) => chosen[(l % m as u64) as usize],
            None => false,
        })
        .collect();
    let mut sorted = classes.to_vec();
    sorted.sort_unstable();
    Ok(SubsetOfGroup {
        ambient: Ambient::Additive { order: p },
        generator: ctx.generator(),
        members,
        family: Family::Cyclotomic { p, m, classes: sorted },
    })
}

/// The squares of GF(p)^* (Paley set when p = 3 mod 4).
pub fn build_paley(ctx: &FieldCtx) -> Result<SubsetOfGroup, SetError> {
    build_cyclotomic(ctx, 2, &[0])
}

/// Hall difference set `C_0 u C_1 u C_3` or `C_0 u C_1 u C_4` of order six,
/// whichever is a difference set for the pinned primitive root.
pub fn build_hall(ctx: &FieldCtx) -> Result<SubsetOfGroup, SetError> {
    require_prime_field(ctx)?;
    let p = ctx.order();
    if !is_hall_prime(p) {
        return Err(SetError::NotHallPrime(p));
    }
    for classes in [[0, 1, 3], [0, 1, 4]] {
        let d = build_cyclotomic(ctx, 6, &classes)?;
        if diff_check(&d)?.is_difference_set {
            return Ok(d);
        }
    }
    Err(SetError::NeitherIsDiffSet(p))
}

/// `p = x^2 + 27` with `(p - 1)/6` odd.
pub fn is_hall_prime(p: u64) -> bool {
    primes::is_prime(p)
        && p % 6 == 1
        && ((p - 1) / 6) % 2 == 1
        && p > 27
        && primes::isqrt(p - 27).pow(2) == p - 27
}

/// Gordon-Mills-Welch set `{ab : Tr_{q,s}(a) = 1, b in B}` in GF(q)^*.
///
/// `b` is a subset of a cyclic group of order `s - 1`; coordinate `e` is
/// identified with `theta'^e`, where `theta' = theta^((q-1)/(s-1))` generates
/// GF(s)^* inside GF(q). An element `x` is in the set iff `Tr_{q,s}(x)` is a
/// nonzero element of the image of `B`.
pub fn build_gmw(ctx: &FieldCtx, s: u64, b: &SubsetOfGroup) -> Result<SubsetOfGroup, SetError> {
    let q = ctx.order();
    if ctx.characteristic() != 2 || q <= 2 {
        return Err(SetError::NotBinaryField(q));
    }
    ctx.subfield_degree(s)?;
    if s >= q {
        return Err(FieldError::NotSubfield { sub: s, q }.into());
    }
    if b.n() != s - 1 {
        return Err(SetError::BadB(format!("B lives in a group of order {}, need {}", b.n(), s - 1)));
    }
    if b.k() != s / 2 {
        return Err(SetError::BadB(format!("|B| = {}, need s/2 = {}", b.k(), s / 2)));
    }
    if s > 2 && !diff_check(b)?.is_difference_set {
        return Err(SetError::BadB("B is not a difference set".into()));
    }
    let n = ctx.group_order();
    let step = n / (s - 1);
    let members = (0..n)
        .map(|u| {
            let tr = ctx.trace(s, ctx.exp_of(u)).expect("subfield checked above");
            match ctx.dlog(tr) {
                Some(l) => b.contains(l / step),
                None => false,
            }
        })
        .collect();
    Ok(SubsetOfGroup {
        ambient: Ambient::Multiplicative { q },
        generator: ctx.generator(),
        members,
        family: Family::Gmw { q, s, inner: Box::new(b.family().clone()) },
    })
}

/// `{1}` in GF(2)^*, the inner set for Singer sets.
pub fn trivial_inner() -> SubsetOfGroup {
    SubsetOfGroup {
        ambient: Ambient::Multiplicative { q: 2 },
        generator: FieldElem::ONE,
        members: vec![true],
        family: Family::Trivial,
    }
}

/// Singer set: the trace-one elements of GF(q) (GMW with `s = 2`).
pub fn build_singer(ctx: &FieldCtx) -> Result<SubsetOfGroup, SetError> {
    build_gmw(ctx, 2, &trivial_inner())
}

/// Sidelnikov set `{x in GF(q)^* : x + 1 is zero or a square}`.
pub fn build_sidelnikov(ctx: &FieldCtx) -> Result<SubsetOfGroup, SetError> {
    let q = ctx.order();
    if ctx.characteristic() == 2 {
        return Err(SetError::EvenCharacteristic(q));
    }
    let members = (0..ctx.group_order())
        .map(|u| {
            let y = ctx.add(ctx.exp_of(u), FieldElem::ONE);
            ctx.dlog(y).is_none_or(|l| l % 2 == 0)
        })
        .collect();
    Ok(SubsetOfGroup {
        ambient: Ambient::Multiplicative { q },
        generator: ctx.generator(),
        members,
        family: Family::Sidelnikov { q },
    })
}

/// Difference statistics of a subset of a cyclic group of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffSetCheck {
    pub n: u64,
    pub k: u64,
    pub lambda_min: u64,
    pub lambda_max: u64,
    pub is_difference_set: bool,
    /// Difference set with `n = 4h - 1` and `k` either `2h - 1` or its
    /// complement size `2h`.
    pub is_hadamard: bool,
}

impl DiffSetCheck {
    fn from_counts(n: u64, k: u64, counts: &[u64]) -> Self {
        let nonzero = &counts[1..];
        let lambda_min = nonzero.iter().copied().min().unwrap_or(0);
        let lambda_max = nonzero.iter().copied().max().unwrap_or(0);
        let is_difference_set = lambda_min == lambda_max;
        let is_hadamard = is_difference_set && n % 4 == 3 && (k == (n - 1) / 2 || k == n.div_ceil(2));
        DiffSetCheck { n, k, lambda_min, lambda_max, is_difference_set, is_hadamard }
    }
}

const PAIRWISE_LIMIT: u64 = 1 << 12;
const PAIRWISE_MAX: u64 = 1 << 16;
const CONVOLUTION_MAX: u64 = 1 << 20;

/// Counts how often each nonzero coordinate difference `u - u'` occurs among
/// ordered pairs of distinct members. Pair enumeration for `n <= 4096`,
/// exact integer convolution above that.
pub fn diff_check(d: &SubsetOfGroup) -> Result<DiffSetCheck, SetError> {
    Ok(DiffSetCheck::from_counts(d.n(), d.k(), &intersection_counts(d)?))
}

pub fn diff_check_pairwise(d: &SubsetOfGroup) -> Result<DiffSetCheck, SetError> {
    Ok(DiffSetCheck::from_counts(d.n(), d.k(), &intersection_counts_pairwise(d)?))
}

pub fn diff_check_convolution(d: &SubsetOfGroup) -> Result<DiffSetCheck, SetError> {
    Ok(DiffSetCheck::from_counts(d.n(), d.k(), &intersection_counts_convolution(d)?))
}

/// `counts[u] = |(D + u) n D|`, the number of ordered member pairs at
/// coordinate difference `u`; `counts[0] = k`.
pub fn intersection_counts(d: &SubsetOfGroup) -> Result<Vec<u64>, SetError> {
    if d.n() <= PAIRWISE_LIMIT {
        intersection_counts_pairwise(d)
    } else {
        intersection_counts_convolution(d)
    }
}

pub fn intersection_counts_pairwise(d: &SubsetOfGroup) -> Result<Vec<u64>, SetError> {
    let n = d.n();
    if n > PAIRWISE_MAX {
        return Err(SetError::TooLarge { n, limit: PAIRWISE_MAX });
    }
    let coords = d.coords();
    let mut counts = vec![0u64; n as usize];
    for &a in &coords {
        for &b in &coords {
            counts[((a + n - b) % n) as usize] += 1;
        }
    }
    Ok(counts)
}

/// Same counts from the periodic autocorrelation of the +1/-1
/// characteristic sequence: with `P_u = c_u + c_{n-u}` built from the exact
/// aperiodic autocorrelation, the number of pairs at difference `u` is
/// `(P_u + 4k - n) / 4`.
pub fn intersection_counts_convolution(d: &SubsetOfGroup) -> Result<Vec<u64>, SetError> {
    let n = d.n();
    if n > CONVOLUTION_MAX {
        return Err(SetError::TooLarge { n, limit: CONVOLUTION_MAX });
    }
    let k = d.k();
    let mut counts = vec![0u64; n as usize];
    counts[0] = k;
    if n > 1 {
        let signs: Vec<i8> = d.bits().iter().map(|&b| if b { 1 } else { -1 }).collect();
        let c = seq::autocorrelation(&signs);
        for u in 1..n as usize {
            let periodic = c[u - 1] + c[n as usize - u - 1];
            let num = periodic + 4 * k as i64 - n as i64;
            debug_assert_eq!(num % 4, 0);
            counts[u] = (num / 4) as u64;
        }
    }
    Ok(counts)
}

/// `|chi(D)|^2` for every character `chi_j(u) = e^{2 pi i j u / n}` of the
/// cyclic group, `j = 0..n`, by one DFT of the indicator.
pub fn character_values(d: &SubsetOfGroup) -> Vec<Complex64> {
    let n = d.n() as usize;
    let mut buf: Vec<Complex64> = d
        .bits()
        .iter()
        .map(|&b| Complex64::new(if b { 1.0 } else { 0.0 }, 0.0))
        .collect();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    buf
}

/// Largest `| |chi(D)|^2 - k(n-k)/(n-1) |` over nontrivial characters; zero
/// (up to rounding) exactly for difference sets.
pub fn char_value_check(d: &SubsetOfGroup) -> f64 {
    let n = d.n();
    if n < 2 {
        return 0.0;
    }
    let k = d.k() as f64;
    let target = k * (n as f64 - k) / (n as f64 - 1.0);
    character_values(d)
        .iter()
        .skip(1)
        .map(|v| (v.norm_sqr() - target).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    #[test]
    fn paley_13_is_the_squares() {
        let d = build_cyclotomic(&field(13), 2, &[0]).unwrap();
        let squares: Vec<u64> = {
            let mut v: Vec<u64> = (1..13u64).map(|x| x * x % 13).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(d.coords(), squares);
        assert_eq!(d.coords(), vec![1, 3, 4, 9, 10, 12]);
        let d4 = build_cyclotomic(&field(13), 4, &[0, 2]).unwrap();
        assert_eq!(d4.bits(), d.bits());
    }

    #[test]
    fn cyclotomic_errors() {
        let f11 = field(11);
        assert_eq!(build_cyclotomic(&f11, 4, &[0, 1]).unwrap_err(), SetError::BadModulus { p: 11, m: 4 });
        let f13 = field(13);
        assert!(matches!(build_cyclotomic(&f13, 4, &[0]), Err(SetError::BadS(_))));
        assert!(matches!(build_cyclotomic(&f13, 4, &[0, 4]), Err(SetError::BadS(_))));
        assert!(matches!(build_cyclotomic(&f13, 4, &[1, 1]), Err(SetError::BadS(_))));
        assert_eq!(build_cyclotomic(&f13, 3, &[0]).unwrap_err(), SetError::BadM(3));
        assert!(matches!(build_cyclotomic(&field(16), 2, &[0]), Err(SetError::NotPrimeField(16))));
    }

    #[test]
    fn cyclotomic_sizes() {
        for (p, m, s) in [(13u64, 4u32, vec![0u32, 1]), (37, 6, vec![0, 1, 3]), (61, 6, vec![0, 2, 5]), (41, 8, vec![0, 1, 2, 5])] {
            let d = build_cyclotomic(&field(p), m, &s).unwrap();
            assert_eq!(d.k(), (p - 1) / 2);
            assert!(!d.contains(0));
        }
    }

    #[test]
    fn class_shift_is_multiplication_by_omega_power() {
        for p in (3..100u64).filter(|&p| primes::is_prime(p)) {
            let ctx = field(p);
            let omega = ctx.generator();
            for (m, s) in [(2u32, vec![0u32]), (4, vec![0, 1]), (6, vec![0, 1, 3]), (6, vec![0, 1, 2])] {
                if (p - 1) % m as u64 != 0 {
                    continue;
                }
                let base = build_cyclotomic(&ctx, m, &s).unwrap();
                for h in 0..m {
                    let shifted: Vec<u32> = s.iter().map(|&x| (x + h) % m).collect();
                    let d = build_cyclotomic(&ctx, m, &shifted).unwrap();
                    let wh = ctx.pow(omega, h as u64);
                    for x in 0..p {
                        let scaled = ctx.mul(wh, FieldElem(x as u32)).0 as u64;
                        assert_eq!(d.contains(scaled), base.contains(x), "p={p} m={m} h={h}");
                    }
                }
            }
        }
    }

    #[test]
    fn hall_sets() {
        let d31 = build_hall(&field(31)).unwrap();
        let c = diff_check(&d31).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (31, 15, 7, 7));
        let d43 = build_hall(&field(43)).unwrap();
        let c = diff_check(&d43).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (43, 21, 10, 10));
        assert_eq!(build_hall(&field(13)).unwrap_err(), SetError::NotHallPrime(13));
        assert_eq!(build_hall(&field(37)).unwrap_err(), SetError::NotHallPrime(37));
    }

    #[test]
    fn singer_is_trace_one_set() {
        let ctx = field(16);
        let d = build_singer(&ctx).unwrap();
        for u in 0..15 {
            let x = ctx.exp_of(u);
            assert_eq!(d.contains(u), ctx.trace(2, x).unwrap() == FieldElem::ONE);
        }
        let c = diff_check(&d).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (15, 8, 4, 4));
        assert!(c.is_difference_set && c.is_hadamard);
    }

    #[test]
    fn gmw_64_over_8() {
        let big = field(64);
        let small = field(8);
        let b = build_singer(&small).unwrap();
        assert_eq!(b.k(), 4);
        let d = build_gmw(&big, 8, &b).unwrap();
        let c = diff_check(&d).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (63, 32, 16, 16));
        // Membership agrees with the literal product set {ab}.
        let step = 63 / 7;
        let a: Vec<FieldElem> = big.elements().filter(|&x| big.trace(8, x).unwrap() == FieldElem::ONE).collect();
        let mut prod: Vec<FieldElem> = a
            .iter()
            .flat_map(|&x| b.coords().into_iter().map(move |e| (x, e)))
            .map(|(x, e)| big.mul(x, big.exp_of(e * step)))
            .collect();
        prod.sort();
        prod.dedup();
        assert_eq!(prod, d.elements(&big).unwrap());
    }

    #[test]
    fn gmw_16_over_4() {
        let b = build_singer(&field(4)).unwrap();
        assert_eq!(b.k(), 2);
        assert!(diff_check(&b).unwrap().is_difference_set);
        let d = build_gmw(&field(16), 4, &b).unwrap();
        let c = diff_check(&d).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (15, 8, 4, 4));
    }

    #[test]
    fn gmw_errors() {
        let ctx = field(16);
        assert!(matches!(build_gmw(&ctx, 8, &trivial_inner()), Err(SetError::Field(FieldError::NotSubfield { .. }))));
        assert!(matches!(build_gmw(&ctx, 16, &trivial_inner()), Err(SetError::Field(FieldError::NotSubfield { .. }))));
        let wrong = SubsetOfGroup::from_members(Ambient::Additive { order: 3 }, FieldElem::ONE, vec![true, false, false], Family::Custom);
        assert!(matches!(build_gmw(&ctx, 4, &wrong), Err(SetError::BadB(_))));
        assert_eq!(build_gmw(&field(9), 3, &trivial_inner()).unwrap_err(), SetError::NotBinaryField(9));
    }

    #[test]
    fn sidelnikov_sets() {
        let ctx = field(7);
        let d = build_sidelnikov(&ctx).unwrap();
        assert_eq!(d.elements(&ctx).unwrap(), vec![FieldElem(1), FieldElem(3), FieldElem(6)]);
        let c = diff_check(&d).unwrap();
        assert!(!c.is_difference_set);
        assert_eq!(build_sidelnikov(&field(9)).unwrap().k(), 4);
        assert_eq!(build_sidelnikov(&field(16)).unwrap_err(), SetError::EvenCharacteristic(16));
    }

    #[test]
    fn paley_7_is_a_difference_set() {
        let d = build_paley(&field(7)).unwrap();
        assert_eq!(d.coords(), vec![1, 2, 4]);
        let c = diff_check(&d).unwrap();
        assert_eq!((c.n, c.k, c.lambda_min, c.lambda_max), (7, 3, 1, 1));
        assert!(c.is_hadamard);
    }

    #[test]
    fn character_value_checks() {
        let gmw = build_singer(&field(16)).unwrap();
        assert!(char_value_check(&gmw) <= 1e-6 * 15.0);
        let sid = build_sidelnikov(&field(7)).unwrap();
        assert!(char_value_check(&sid) > 0.5);
        let full = SubsetOfGroup::from_members(Ambient::Multiplicative { q: 16 }, FieldElem(2), vec![true; 15], Family::Custom);
        assert!(char_value_check(&full) < 1e-12);
    }

    #[test]
    fn convolution_matches_pairwise_on_families() {
        for d in [
            build_paley(&field(103)).unwrap(),
            build_sidelnikov(&field(81)).unwrap(),
            build_singer(&field(256)).unwrap(),
            build_cyclotomic(&field(97), 4, &[0, 1]).unwrap(),
        ] {
            assert_eq!(diff_check_pairwise(&d).unwrap(), diff_check_convolution(&d).unwrap());
        }
    }

    #[test]
    fn nu_values() {
        let nu = |p, m, c: &[u32]| Family::Cyclotomic { p, m, classes: c.to_vec() }.nu().unwrap();
        assert!((nu(31, 6, &[0, 1, 3]) - 1.0 / 9.0).abs() < 1e-15);
        assert!((nu(31, 6, &[0, 1, 4]) - 1.0 / 9.0).abs() < 1e-15);
        assert_eq!(nu(31, 6, &[0, 1, 2]), 1.0);
        assert_eq!(nu(31, 6, &[0, 2, 4]), 1.0);
        assert_eq!(nu(37, 6, &[0, 1, 3]), 1.0);
        assert_eq!(nu(103, 2, &[0]), 1.0);
        assert_eq!(nu(17, 4, &[0, 1]), 1.0);
    }

    #[test]
    fn record_round_trip() {
        let d = build_gmw(&field(64), 8, &build_singer(&field(8)).unwrap()).unwrap();
        let json = serde_json::to_string(&d.to_record()).unwrap();
        let back: SetRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(SubsetOfGroup::from_record(&back).unwrap(), d);
        assert!(json.contains("\"family\":\"gmw\""));
    }
}
