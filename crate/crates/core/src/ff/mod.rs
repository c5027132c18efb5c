//! Finite fields GF(p^k) with a pinned generator and full log/antilog tables.
//!
//! Elements are encoded by their coordinate vector over GF(p) in the
//! polynomial basis, read as a base-p integer: `index = sum c_i p^i`. For a
//! prime field this is just the residue. Multiplication goes through the
//! discrete-log tables built once at construction; everything is immutable
//! afterwards.

mod poly;
mod poly_table;
pub mod primes;

use std::f64::consts::PI;

use rustfft::num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order constructed by default.
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("NoGenerator: no generator found for GF({0})")]
    NoGenerator(u64),
    #[error("TooLarge: field of order {order} exceeds the cap {cap}")]
    TooLarge { order: u64, cap: u64 },
    #[error("BadDegree: extension degree {0} must be at least 2")]
    BadDegree(u32),
    #[error("NotSubfield: {sub} is not a subfield order of GF({q})")]
    NotSubfield { sub: u64, q: u64 },
    #[error("ReducibleModulus: pinned polynomial for GF({p}^{k}) is reducible")]
    ReducibleModulus { p: u64, k: u32 },
}

/// An element of a [`FieldCtx`], by canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Multiplicative character `xi^j`, where `xi(theta) = exp(2 pi i / (q - 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultChar(pub u64);

impl MultChar {
    pub const TRIVIAL: MultChar = MultChar(0);

    pub fn is_trivial(self, group_order: u64) -> bool {
        self.0.is_multiple_of(group_order)
    }

    pub fn mul(self, other: MultChar, group_order: u64) -> MultChar {
        MultChar((self.0 + other.0) % group_order)
    }

    pub fn conj(self, group_order: u64) -> MultChar {
        MultChar((group_order - self.0 % group_order) % group_order)
    }
}

#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    k: u32,
    q: u64,
    /// Low coefficients of the monic reduction polynomial; empty for k = 1.
    modulus: Vec<u32>,
    generator: FieldElem,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldCtx {
    /// GF(p) with the smallest positive primitive root as generator.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::prime_with_cap(p, DEFAULT_CAP)
    }

    pub fn prime_with_cap(p: u64, cap: u64) -> Result<Self, FieldError> {
        if !primes::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > cap {
            return Err(FieldError::TooLarge { order: p, cap });
        }
        Self::build(p, 1, Vec::new())
    }

    /// GF(p^k), k >= 2, reduced modulo the pinned polynomial for `(p, k)`.
    pub fn extension(p: u64, k: u32) -> Result<Self, FieldError> {
        Self::extension_with_cap(p, k, DEFAULT_CAP)
    }

    pub fn extension_with_cap(p: u64, k: u32, cap: u64) -> Result<Self, FieldError> {
        if k < 2 {
            return Err(FieldError::BadDegree(k));
        }
        if !primes::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= cap)
            .ok_or(FieldError::TooLarge { order: p.saturating_pow(k), cap })?;
        let modulus = poly_table::REDUCTION_POLYS
            .iter()
            .find(|&&(pp, kk, _)| pp as u64 == p && kk == k)
            .map(|&(_, _, low)| low.to_vec())
            .ok_or(FieldError::TooLarge { order, cap: DEFAULT_CAP })?;
        if !poly::is_irreducible(p, &modulus) {
            return Err(FieldError::ReducibleModulus { p, k });
        }
        Self::build(p, k, modulus)
    }

    /// Any prime power order: dispatches to [`FieldCtx::prime`] or
    /// [`FieldCtx::extension`].
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        match primes::prime_power(q) {
            Some((p, 1)) => Self::prime(p),
            Some((p, k)) => Self::extension(p, k),
            None => Err(FieldError::NotPrimePower(q)),
        }
    }

    fn build(p: u64, k: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let q = p.pow(k);
        let n = q - 1;
        let factors = primes::prime_factors(n);
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            modulus,
            generator: FieldElem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let generator = (1..q)
            .map(|i| FieldElem(i as u32))
            .find(|&g| {
                ctx.slow_pow(g, n) == FieldElem::ONE
                    && factors.iter().all(|&l| ctx.slow_pow(g, n / l) != FieldElem::ONE)
            })
            .ok_or(FieldError::NoGenerator(q))?;
        ctx.generator = generator;

        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = FieldElem::ONE;
        let is_x = k > 1 && generator.0 as u64 == p;
        for u in 0..n {
            if log[x.0 as usize] != u32::MAX {
                return Err(FieldError::NoGenerator(q));
            }
            exp.push(x.0);
            log[x.0 as usize] = u as u32;
            x = if is_x { ctx.times_x(x) } else { ctx.slow_mul(x, generator) };
        }
        ctx.exp = exp;
        ctx.log = log;
        Ok(ctx)
    }

    fn digits(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0 as u64;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn from_digits(&self, d: &[u64]) -> FieldElem {
        FieldElem(d.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u32)
    }

    fn times_x(&self, a: FieldElem) -> FieldElem {
        let p = self.p;
        let mut d = self.digits(a);
        let top = d.pop().unwrap_or(0);
        d.insert(0, 0);
        for (i, c) in d.iter_mut().enumerate() {
            *c = (*c + p - top * self.modulus[i] as u64 % p) % p;
        }
        self.from_digits(&d)
    }

    /// Schoolbook multiplication modulo the reduction polynomial; used only
    /// before the tables exist.
    fn slow_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p;
        if self.k == 1 {
            return FieldElem((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..k {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + p - c * self.modulus[i] as u64 % p) % p;
            }
        }
        prod.truncate(k);
        self.from_digits(&prod)
    }

    fn slow_pow(&self, mut base: FieldElem, mut e: u64) -> FieldElem {
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn group_order(&self) -> u64 {
        self.q - 1
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    /// Low coefficients of the monic reduction polynomial (empty for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u32).map(FieldElem)
    }

    /// The embedded copy of the integer `c` (mod p).
    pub fn from_int(&self, c: u64) -> FieldElem {
        FieldElem((c % self.p) as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElem(out as u32)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        if self.p == 2 {
            return a;
        }
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 {
            out += (self.p - x % self.p) % self.p * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElem(out as u32)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let n = self.group_order();
        let e = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % n;
        FieldElem(self.exp[e as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        let l = self.dlog(a)?;
        let n = self.group_order();
        Some(self.exp_of((n - l) % n))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        match self.dlog(a) {
            None if e == 0 => FieldElem::ONE,
            None => FieldElem::ZERO,
            Some(l) => {
                let n = self.group_order();
                let e = ((l as u128 * e as u128) % n as u128) as u64;
                self.exp_of(e)
            }
        }
    }

    /// `theta^u` for any `u` (reduced mod q - 1).
    pub fn exp_of(&self, u: u64) -> FieldElem {
        FieldElem(self.exp[(u % self.group_order()) as usize])
    }

    /// Discrete log base theta; `None` for zero.
    pub fn dlog(&self, a: FieldElem) -> Option<u64> {
        match self.log[a.0 as usize] {
            u32::MAX => None,
            l => Some(l as u64),
        }
    }

    /// Degree `d` of the subfield GF(p^d) of order `sub_order`.
    pub fn subfield_degree(&self, sub_order: u64) -> Result<u32, FieldError> {
        let err = FieldError::NotSubfield { sub: sub_order, q: self.q };
        match primes::prime_power(sub_order) {
            Some((p, d)) if p == self.p && self.k.is_multiple_of(d) => Ok(d),
            _ => Err(err),
        }
    }

    /// Generator `theta^((q-1)/(s-1))` of the subfield's multiplicative group.
    pub fn subfield_generator(&self, sub_order: u64) -> Result<FieldElem, FieldError> {
        self.subfield_degree(sub_order)?;
        Ok(self.exp_of(self.group_order() / (sub_order - 1)))
    }

    /// Trace from GF(q) down to its subfield of order `sub_order`.
    pub fn trace(&self, sub_order: u64, x: FieldElem) -> Result<FieldElem, FieldError> {
        self.trace_between(self.q, sub_order, x)
    }

    /// Relative trace `Tr_{upper, lower}` for nested subfields of this field;
    /// `x` must lie in the subfield of order `upper`.
    pub fn trace_between(&self, upper: u64, lower: u64, x: FieldElem) -> Result<FieldElem, FieldError> {
        let du = self.subfield_degree(upper)?;
        let dl = self.subfield_degree(lower)?;
        if du % dl != 0 {
            return Err(FieldError::NotSubfield { sub: lower, q: upper });
        }
        let Some(l) = self.dlog(x) else {
            return Ok(FieldElem::ZERO);
        };
        let n = self.group_order() as u128;
        let mut acc = FieldElem::ZERO;
        let mut power = 1u128; // lower^i mod n
        for _ in 0..du / dl {
            acc = self.add(acc, self.exp_of((l as u128 * power % n) as u64));
            power = power * lower as u128 % n;
        }
        Ok(acc)
    }

    /// Value of `chi` at `x`, with `chi(0) = 1` for trivial `chi` and `0` otherwise.
    pub fn char_eval(&self, chi: MultChar, x: FieldElem) -> Complex64 {
        let n = self.group_order();
        match self.dlog(x) {
            None if chi.is_trivial(n) => Complex64::new(1.0, 0.0),
            None => Complex64::new(0.0, 0.0),
            Some(l) => root_of_unity((chi.0 % n) * l % n, n),
        }
    }

    /// The additive character `e^{2 pi i Tr_{q,p}(x) / p}`.
    pub fn canonical_additive(&self, x: FieldElem) -> Complex64 {
        let t = self.trace(self.p, x).expect("prime subfield always exists");
        root_of_unity(t.0 as u64, self.p)
    }
}

/// `exp(2 pi i num / den)`, reducing `num` first so the angle stays small.
pub fn root_of_unity(num: u64, den: u64) -> Complex64 {
    let r = num % den;
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / den as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_generators() {
        assert_eq!(FieldCtx::prime(7).unwrap().generator(), FieldElem(3));
        assert_eq!(FieldCtx::prime(13).unwrap().generator(), FieldElem(2));
        assert_eq!(FieldCtx::prime(2).unwrap().generator(), FieldElem(1));
        assert_eq!(FieldCtx::prime(4).unwrap_err(), FieldError::NotPrime(4));
    }

    #[test]
    fn generator_is_brute_force_smallest_primitive_root() {
        let order = |g: u64, p: u64| {
            let mut y = g % p;
            let mut i = 1;
            while y != 1 {
                y = y * g % p;
                i += 1;
            }
            i
        };
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 97, 101] {
            let smallest = (2..p).find(|&g| order(g, p) == p - 1).unwrap();
            assert_eq!(FieldCtx::prime(p).unwrap().generator().0 as u64, smallest, "p={p}");
        }
    }

    #[test]
    fn extension_fields() {
        let f16 = FieldCtx::extension(2, 4).unwrap();
        assert_eq!(f16.order(), 16);
        let mut seen: Vec<u64> = (1..16).map(|x| f16.dlog(FieldElem(x)).unwrap()).collect();
        seen.sort();
        assert_eq!(seen, (0..15).collect::<Vec<_>>());

        let f9 = FieldCtx::extension(3, 2).unwrap();
        assert_eq!(f9.group_order(), 8);
        assert_eq!(
            FieldCtx::extension(2, 30).unwrap_err(),
            FieldError::TooLarge { order: 1 << 30, cap: DEFAULT_CAP }
        );
        assert_eq!(FieldCtx::extension(2, 1).unwrap_err(), FieldError::BadDegree(1));
        assert_eq!(FieldCtx::with_order(12).unwrap_err(), FieldError::NotPrimePower(12));
    }

    #[test]
    fn table_multiplication_matches_schoolbook() {
        for (p, k) in [(2, 4), (2, 8), (3, 3), (5, 2), (7, 2), (3, 5)] {
            let f = FieldCtx::extension(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements().step_by(7) {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        let f = FieldCtx::extension(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            }
            for b in f.elements() {
                for c in f.elements() {
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn dlog_is_multiplicative_exhaustive() {
        for q in [16u64, 27, 32, 49, 64, 81, 125, 128, 256, 1024, 31, 101] {
            let f = FieldCtx::with_order(q).unwrap();
            let n = f.group_order();
            for a in 1..q as u32 {
                for b in (1..q as u32).step_by(if q > 300 { 13 } else { 1 }) {
                    let (a, b) = (FieldElem(a), FieldElem(b));
                    assert_eq!(
                        f.dlog(f.mul(a, b)).unwrap(),
                        (f.dlog(a).unwrap() + f.dlog(b).unwrap()) % n
                    );
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f = FieldCtx::extension(2, 4).unwrap();
        assert_eq!(f.trace(2, FieldElem::ZERO).unwrap(), FieldElem::ZERO);
        let ones = f.elements().filter(|&x| f.trace(2, x).unwrap() == FieldElem::ONE).count();
        assert_eq!(ones, 8);
        assert_eq!(
            f.trace(8, FieldElem(3)).unwrap_err(),
            FieldError::NotSubfield { sub: 8, q: 16 }
        );
    }

    #[test]
    fn trace_is_linear_and_lands_in_subfield() {
        for (q, subs) in [(16u64, vec![2u64, 4]), (64, vec![2, 4, 8]), (81, vec![3, 9]), (1024, vec![2, 4, 32])] {
            let f = FieldCtx::with_order(q).unwrap();
            for s in subs {
                for x in f.elements() {
                    let tx = f.trace(s, x).unwrap();
                    assert_eq!(f.pow(tx, s), tx, "trace must be fixed by Frobenius");
                    for y in f.elements().step_by(if q > 100 { 17 } else { 1 }) {
                        let lhs = f.trace(s, f.add(x, y)).unwrap();
                        let rhs = f.add(tx, f.trace(s, y).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn transitive_trace() {
        let f = FieldCtx::extension(2, 6).unwrap();
        for x in f.elements() {
            let via = f.trace_between(8, 2, f.trace(8, x).unwrap()).unwrap();
            assert_eq!(via, f.trace(2, x).unwrap());
        }
    }

    #[test]
    fn characters() {
        let f = FieldCtx::prime(7).unwrap();
        assert_eq!(f.char_eval(MultChar(0), FieldElem::ZERO), Complex64::new(1.0, 0.0));
        assert_eq!(f.char_eval(MultChar(3), FieldElem::ZERO), Complex64::new(0.0, 0.0));
        for j in 0..6 {
            let v = f.char_eval(MultChar(j), f.generator());
            assert!((v - root_of_unity(j, 6)).norm() < 1e-15);
        }
        let g = FieldCtx::extension(3, 3).unwrap();
        for j in [1u64, 5, 13] {
            for a in g.elements().skip(1) {
                for b in g.elements().skip(1) {
                    let lhs = g.char_eval(MultChar(j), g.mul(a, b));
                    let rhs = g.char_eval(MultChar(j), a) * g.char_eval(MultChar(j), b);
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }
}
