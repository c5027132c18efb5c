//! Gauss, Jacobi and Eisenstein sums over a [`FieldCtx`].
//!
//! Characters are indexed by exponent: `MultChar(j)` is `xi^j` with
//! `xi(theta) = e^{2 pi i/(q-1)}`. All sums are in double precision.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{FieldCtx, FieldElem, FieldError, MultChar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CharSumError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("TooLarge: GF({q}) exceeds the limit {limit} for this computation")]
    TooLarge { q: u64, limit: u64 },
    #[error("TrivialChar: the character must be nontrivial")]
    TrivialChar,
    #[error("PermutedMultisets: the alpha characters are a permutation of the beta characters")]
    PermutedMultisets,
    #[error("TooManyFactors: r + s = {0} exceeds 8")]
    TooManyFactors(usize),
}

pub const GAUSS_TABLE_MAX: u64 = 1 << 20;
pub const KATZ_MAX: u64 = 1 << 12;

/// `G(xi^j)` for all `j` in `0..q-1`, with
/// `G(chi) = sum_{y != 0} chi(y) e^{2 pi i Tr(y)/p}`.
#[derive(Debug, Clone)]
pub struct GaussTable {
    q: u64,
    values: Vec<Complex64>,
}

impl GaussTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn get(&self, chi: MultChar) -> Complex64 {
        self.values[(chi.0 % (self.q - 1)) as usize]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// All Gauss sums at once: with `psi_u = e^{2 pi i Tr(theta^u)/p}`,
/// `G(xi^j) = sum_u psi_u e^{2 pi i j u/(q-1)}` is an unnormalized inverse
/// DFT over the exponent domain.
pub fn gauss_table(ctx: &FieldCtx) -> Result<GaussTable, CharSumError> {
    let q = ctx.order();
    if q > GAUSS_TABLE_MAX {
        return Err(CharSumError::TooLarge { q, limit: GAUSS_TABLE_MAX });
    }
    let n = ctx.group_order() as usize;
    let mut buf: Vec<Complex64> = (0..n as u64).map(|u| ctx.canonical_additive(ctx.exp_of(u))).collect();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    Ok(GaussTable { q, values: buf })
}

/// Gauss sum of a single character by direct summation.
pub fn gauss_direct(ctx: &FieldCtx, chi: MultChar) -> Complex64 {
    ctx.elements()
        .skip(1)
        .map(|y| ctx.char_eval(chi, y) * ctx.canonical_additive(y))
        .sum()
}

/// `J(psi, chi) = sum_y psi(y) chi(1 - y)` over all of GF(q).
pub fn jacobi(ctx: &FieldCtx, psi: MultChar, chi: MultChar) -> Complex64 {
    ctx.elements()
        .map(|y| ctx.char_eval(psi, y) * ctx.char_eval(chi, ctx.sub(FieldElem::ONE, y)))
        .sum()
}

/// `J(psi, chi) = G(psi) G(chi) conj(G(psi chi)) / q` for nontrivial `psi`, `chi`.
pub fn jacobi_from_gauss(table: &GaussTable, psi: MultChar, chi: MultChar) -> Option<Complex64> {
    let n = table.q - 1;
    if psi.is_trivial(n) || chi.is_trivial(n) {
        return None;
    }
    let prod = psi.mul(chi, n);
    Some(table.get(psi) * table.get(chi) * table.get(prod).conj() / table.q as f64)
}

/// A field together with its cached Gauss sums; Jacobi sums come from the
/// cache where the Gauss-sum identity applies and from direct summation
/// otherwise.
pub struct CharSums<'a> {
    ctx: &'a FieldCtx,
    gauss: Option<GaussTable>,
}

impl<'a> CharSums<'a> {
    pub fn new(ctx: &'a FieldCtx) -> Self {
        CharSums { ctx, gauss: gauss_table(ctx).ok() }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.ctx
    }

    pub fn gauss_table(&self) -> Option<&GaussTable> {
        self.gauss.as_ref()
    }

    pub fn gauss(&self, chi: MultChar) -> Complex64 {
        match &self.gauss {
            Some(t) => t.get(chi),
            None => gauss_direct(self.ctx, chi),
        }
    }

    pub fn jacobi(&self, psi: MultChar, chi: MultChar) -> Complex64 {
        self.gauss
            .as_ref()
            .and_then(|t| jacobi_from_gauss(t, psi, chi))
            .unwrap_or_else(|| jacobi(self.ctx, psi, chi))
    }
}

/// Eisenstein sum `E(chi) = sum_{Tr_{q,s}(a) = 1} chi(a)` for a proper
/// subfield of order `s`.
pub fn eisenstein(ctx: &FieldCtx, sub_order: u64, chi: MultChar) -> Result<Complex64, CharSumError> {
    check_proper_subfield(ctx, sub_order)?;
    if chi.is_trivial(ctx.group_order()) {
        return Err(CharSumError::TrivialChar);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in ctx.elements() {
        if ctx.trace(sub_order, a)? == FieldElem::ONE {
            acc += ctx.char_eval(chi, a);
        }
    }
    Ok(acc)
}

fn check_proper_subfield(ctx: &FieldCtx, sub_order: u64) -> Result<(), CharSumError> {
    ctx.subfield_degree(sub_order)?;
    if sub_order == ctx.order() {
        return Err(FieldError::NotSubfield { sub: sub_order, q: ctx.order() }.into());
    }
    Ok(())
}

/// Gauss sum over the subfield GF(s) of the restriction of `chi`,
/// `sum_{y in GF(s)^*} chi(y) e^{2 pi i Tr_{s,p}(y)/p}`.
pub fn gauss_restricted(ctx: &FieldCtx, sub_order: u64, chi: MultChar) -> Result<Complex64, CharSumError> {
    let g = ctx.subfield_generator(sub_order)?;
    let p = ctx.characteristic();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut y = FieldElem::ONE;
    for _ in 0..sub_order - 1 {
        let tr = ctx.trace_between(sub_order, p, y)?;
        acc += ctx.char_eval(chi, y) * crate::ff::root_of_unity(tr.0 as u64, p);
        y = ctx.mul(y, g);
    }
    Ok(acc)
}

/// Closed form of the Eisenstein sum: `G(chi)/G(chi*)` when the restriction
/// `chi*` to GF(s)^* is nontrivial, `-G(chi)/s` when it is trivial.
pub fn eisenstein_from_gauss(
    ctx: &FieldCtx,
    table: &GaussTable,
    sub_order: u64,
    chi: MultChar,
) -> Result<Complex64, CharSumError> {
    check_proper_subfield(ctx, sub_order)?;
    let n = ctx.group_order();
    if chi.is_trivial(n) {
        return Err(CharSumError::TrivialChar);
    }
    let g = table.get(chi);
    // chi*(theta') = chi(theta^((q-1)/(s-1))) is trivial iff (s-1) | j.
    if chi.0.is_multiple_of(sub_order - 1) {
        Ok(-g / sub_order as f64)
    } else {
        Ok(g / gauss_restricted(ctx, sub_order, chi)?)
    }
}

/// Both sides of the Katz bound for one tuple of characters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KatzCheck {
    pub lhs: f64,
    pub bound: f64,
}

impl KatzCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.bound + 1e-6
    }
}

/// `|sum_chi prod_i G(chi alpha_i) prod_j conj(G(chi beta_j))|` against
/// `max(r, s) q^{(r+s+1)/2}`. The bound only applies when the alphas are not
/// a permutation of the betas.
pub fn katz_check(table: &GaussTable, alphas: &[MultChar], betas: &[MultChar]) -> Result<KatzCheck, CharSumError> {
    let q = table.q;
    let n = q - 1;
    if q > KATZ_MAX {
        return Err(CharSumError::TooLarge { q, limit: KATZ_MAX });
    }
    let total = alphas.len() + betas.len();
    if total > 8 {
        return Err(CharSumError::TooManyFactors(total));
    }
    let canon = |v: &[MultChar]| {
        let mut e: Vec<u64> = v.iter().map(|c| c.0 % n).collect();
        e.sort_unstable();
        e
    };
    if canon(alphas) == canon(betas) {
        return Err(CharSumError::PermutedMultisets);
    }
    let sum: Complex64 = (0..n)
        .map(|j| {
            let chi = MultChar(j);
            let a = alphas.iter().fold(Complex64::new(1.0, 0.0), |acc, &al| acc * table.get(chi.mul(al, n)));
            betas.iter().fold(a, |acc, &be| acc * table.get(chi.mul(be, n)).conj())
        })
        .sum();
    let r = alphas.len().max(betas.len()) as f64;
    Ok(KatzCheck { lhs: sum.norm(), bound: r * (q as f64).powf((total as f64 + 1.0) / 2.0) })
}

/// Outcome of [`identity_suite`] on one field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub q: u64,
    pub checks: u64,
    /// Largest absolute error over all checks.
    pub max_err: f64,
    /// Up to ten descriptions of failed checks.
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Absolute tolerance for identities whose sides have size about `q`.
pub fn identity_tolerance(q: u64) -> f64 {
    1e-9 * q as f64
}

/// Exponents of `psi` used for Jacobi checks: all of them for small fields,
/// an evenly spaced sample of 16 (always including 1) otherwise.
fn jacobi_psi_sample(n: u64) -> Vec<u64> {
    if n <= 64 {
        (0..n).collect()
    } else {
        let stride = n / 16;
        (0..16).map(|i| (1 + i * stride) % n).collect()
    }
}

/// Checks the standard Gauss and Jacobi sum identities and the Eisenstein
/// closed form against direct summation on one field:
///
/// * `G(1) = -1`, `|G(chi)| = sqrt(q)`, `G(chi) G(conj chi) = chi(-1) q`;
/// * `J = 0` when exactly one argument is trivial, `|J| = 1` when the
///   product is trivial, `|J| = sqrt(q)` otherwise;
/// * `J(psi, chi) q = G(psi) G(chi) conj(G(psi chi))`;
/// * `J(psi, chi) J(conj psi, chi psi) = psi(-1) q` when `psi chi` is
///   nontrivial as well;
/// * `E(chi)` over every proper subfield equals its Gauss-sum form.
pub fn identity_suite(ctx: &FieldCtx) -> Result<IdentityReport, CharSumError> {
    let q = ctx.order();
    let n = ctx.group_order();
    let qf = q as f64;
    let tol = identity_tolerance(q);
    let table = gauss_table(ctx)?;
    let mut report = IdentityReport { q, checks: 0, max_err: 0.0, failures: Vec::new() };
    let mut check = |what: &dyn Fn() -> String, err: f64| {
        report.checks += 1;
        report.max_err = report.max_err.max(err);
        if !(err <= tol) && report.failures.len() < 10 {
            report.failures.push(format!("{}: error {err:e}", what()));
        }
    };
    let minus_one = ctx.neg(FieldElem::ONE);
    let trivial = MultChar(0);
    check(&|| "G(1) = -1".into(), (table.get(trivial) + 1.0).norm());
    for j in 1..n {
        let chi = MultChar(j);
        let g = table.get(chi);
        check(&|| format!("|G(xi^{j})| = sqrt(q)"), (g.norm() - qf.sqrt()).abs());
        let rhs = ctx.char_eval(chi, minus_one) * qf;
        check(&|| format!("G(xi^{j}) G(conj) = chi(-1) q"), (g * table.get(chi.conj(n)) - rhs).norm());
    }
    for a in jacobi_psi_sample(n) {
        let psi = MultChar(a);
        for b in 0..n {
            let chi = MultChar(b);
            let j = jacobi(ctx, psi, chi);
            let (pt, ct) = (psi.is_trivial(n), chi.is_trivial(n));
            let prod = psi.mul(chi, n);
            if pt != ct {
                check(&|| format!("J(xi^{a}, xi^{b}) = 0"), j.norm());
            } else if !pt {
                let want = if prod.is_trivial(n) { 1.0 } else { qf.sqrt() };
                check(&|| format!("|J(xi^{a}, xi^{b})|"), (j.norm() - want).abs());
                let via_gauss = table.get(psi) * table.get(chi) * table.get(prod).conj();
                check(&|| format!("J(xi^{a}, xi^{b}) q vs Gauss sums"), (j * qf - via_gauss).norm());
                // Needs psi chi nontrivial too, else the partner sum vanishes.
                if !prod.is_trivial(n) {
                    let partner = jacobi(ctx, psi.conj(n), prod);
                    let rhs = ctx.char_eval(psi, minus_one) * qf;
                    check(&|| format!("J(xi^{a}, xi^{b}) J(conj, product) = psi(-1) q"), (j * partner - rhs).norm());
                }
            }
        }
    }
    let p = ctx.characteristic();
    for d in 1..ctx.degree() {
        if !ctx.degree().is_multiple_of(d) {
            continue;
        }
        let s = p.pow(d);
        for j in 1..n {
            let chi = MultChar(j);
            let direct = eisenstein(ctx, s, chi)?;
            let closed = eisenstein_from_gauss(ctx, &table, s, chi)?;
            check(&|| format!("E(xi^{j}) over GF({s})"), (direct - closed).norm());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    #[test]
    fn gauss_table_matches_direct_sums() {
        for q in [5u64, 7, 9, 16, 27, 49] {
            let ctx = field(q);
            let t = gauss_table(&ctx).unwrap();
            for j in 0..q - 1 {
                assert!((t.get(MultChar(j)) - gauss_direct(&ctx, MultChar(j))).norm() < 1e-9, "q={q} j={j}");
            }
        }
    }

    #[test]
    fn gauss_examples() {
        let t = gauss_table(&field(5)).unwrap();
        assert!((t.get(MultChar(0)) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        // Quadratic Gauss sum over GF(5): 4-term sum gives +sqrt(5).
        let direct: Complex64 = (1..5u64)
            .map(|y| {
                let leg = if [1, 4].contains(&y) { 1.0 } else { -1.0 };
                Complex64::from_polar(leg, 2.0 * std::f64::consts::PI * y as f64 / 5.0)
            })
            .sum();
        assert!((direct - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
        assert!((t.get(MultChar(2)) - direct).norm() < 1e-9);

        let t7 = gauss_table(&field(7)).unwrap();
        for j in 1..6 {
            assert!((t7.get(MultChar(j)).norm() - 7f64.sqrt()).abs() < 1e-9);
        }
        assert!(matches!(
            gauss_table(&FieldCtx::extension(2, 21).unwrap()),
            Err(CharSumError::TooLarge { .. })
        ));
    }

    #[test]
    fn jacobi_examples() {
        let ctx = field(7);
        let n = 6;
        assert!(jacobi(&ctx, MultChar(0), MultChar(2)).norm() < 1e-12);
        assert!(jacobi(&ctx, MultChar(4), MultChar(0)).norm() < 1e-12);
        for j in 1..n {
            let v = jacobi(&ctx, MultChar(j), MultChar(j).conj(n));
            assert!((v.norm() - 1.0).abs() < 1e-9);
        }
        assert!((jacobi(&ctx, MultChar(1), MultChar(2)).norm() - 7f64.sqrt()).abs() < 1e-9);
        let sums = CharSums::new(&ctx);
        for a in 0..n {
            for b in 0..n {
                let direct = jacobi(&ctx, MultChar(a), MultChar(b));
                assert!((sums.jacobi(MultChar(a), MultChar(b)) - direct).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn eisenstein_examples() {
        let ctx = field(16);
        let t = gauss_table(&ctx).unwrap();
        // chi* trivial on GF(2)^* for every chi.
        for j in 1..15 {
            let e = eisenstein(&ctx, 2, MultChar(j)).unwrap();
            let g = t.get(MultChar(j));
            assert!((e + g / 2.0).norm() < 1e-9);
            assert!((e.norm() - 2.0).abs() < 1e-9);
        }
        // GF(16)/GF(4): chi* trivial iff 3 | j.
        for j in 1..15u64 {
            let e = eisenstein(&ctx, 4, MultChar(j)).unwrap();
            let closed = eisenstein_from_gauss(&ctx, &t, 4, MultChar(j)).unwrap();
            assert!((e - closed).norm() < 1e-9, "j={j}");
            if j % 3 != 0 {
                let gs = gauss_restricted(&ctx, 4, MultChar(j)).unwrap();
                assert!((e - t.get(MultChar(j)) / gs).norm() < 1e-9);
            }
        }
        assert_eq!(eisenstein(&ctx, 4, MultChar(0)).unwrap_err(), CharSumError::TrivialChar);
        assert!(matches!(eisenstein(&ctx, 8, MultChar(1)), Err(CharSumError::Field(FieldError::NotSubfield { .. }))));
        assert!(matches!(eisenstein(&ctx, 16, MultChar(1)), Err(CharSumError::Field(FieldError::NotSubfield { .. }))));
    }

    #[test]
    fn katz_examples() {
        let t7 = gauss_table(&field(7)).unwrap();
        let k = katz_check(&t7, &[MultChar(1), MultChar(2)], &[MultChar(3), MultChar(5)]).unwrap();
        assert_eq!(k.bound, 2.0 * 7f64.powf(2.5));
        assert!(k.holds());
        assert_eq!(
            katz_check(&t7, &[MultChar(1), MultChar(2)], &[MultChar(2), MultChar(1)]).unwrap_err(),
            CharSumError::PermutedMultisets
        );
        assert_eq!(
            katz_check(&t7, &[MultChar(1), MultChar(2)], &[MultChar(8), MultChar(1)]).unwrap_err(),
            CharSumError::PermutedMultisets
        );
        let t9 = gauss_table(&field(9)).unwrap();
        let k = katz_check(&t9, &[MultChar(1)], &[MultChar(2)]).unwrap();
        assert_eq!(k.bound, 27.0);
        assert!(k.holds());
    }

    #[test]
    fn identity_suite_small_fields() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64, 81] {
            let r = identity_suite(&field(q)).unwrap();
            assert!(r.passed(), "GF({q}): {:?}", r.failures);
            assert!(r.checks > 0);
        }
    }
}
