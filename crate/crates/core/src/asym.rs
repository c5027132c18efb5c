//! The limiting merit-factor function
//!
//! ```text
//! 1/phi_nu(R, T) = 1 - 2(1 + nu) T / 3
//!                + 4  sum_{m >= 1}  max(0, 1 - m/T)^2
//!                + nu sum_{m in Z}  max(0, 1 - |1 + (2R - m)/T|)^2
//! ```
//!
//! and its global maximum, the largest real root of a cubic in `nu`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsymError {
    #[error("BadT: T must be positive, got {0}")]
    BadT(f64),
    #[error("OutOfRange: nu must lie in [0, 1], got {0}")]
    OutOfRange(f64),
    #[error("RootNotFound: cubic has fewer real roots than expected")]
    RootNotFound,
    #[error("Inconsistent: phi at the optimum is {at_opt}, cubic root is {root}")]
    Inconsistent { at_opt: f64, root: f64 },
}

/// Value of `phi_nu`. The reciprocal series can in principle be nonpositive
/// outside the regime the formula is meant for; that case is reported as
/// `Unbounded` rather than as a bare infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phi {
    Finite(f64),
    Unbounded { reciprocal: f64 },
}

impl Phi {
    /// The value, with `+inf` for the unbounded case.
    pub fn value(self) -> f64 {
        match self {
            Phi::Finite(v) => v,
            Phi::Unbounded { .. } => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Phi::Finite(_))
    }
}

/// `1/phi_nu(R, T)` with both series summed over their finitely many
/// nonzero terms.
#[allow(non_snake_case)]
pub fn phi_reciprocal(nu: f64, R: f64, T: f64) -> Result<f64, AsymError> {
    if !(T > 0.0) || !T.is_finite() {
        return Err(AsymError::BadT(T));
    }
    let mut acc = 1.0 - 2.0 * (1.0 + nu) * T / 3.0;
    // m >= 1 with m < T
    let mut m = 1.0;
    while m < T {
        let x = 1.0 - m / T;
        acc += 4.0 * x * x;
        m += 1.0;
    }
    // |1 + (2R - m)/T| < 1  <=>  2R < m < 2R + 2T
    let lo = (2.0 * R).floor() as i64;
    let hi = (2.0 * R + 2.0 * T).ceil() as i64;
    for m in lo..=hi {
        let x = 1.0 - (1.0 + (2.0 * R - m as f64) / T).abs();
        if x > 0.0 {
            acc += nu * x * x;
        }
    }
    Ok(acc)
}

#[allow(non_snake_case)]
pub fn phi(nu: f64, R: f64, T: f64) -> Result<Phi, AsymError> {
    let reciprocal = phi_reciprocal(nu, R, T)?;
    Ok(if reciprocal > 0.0 { Phi::Finite(1.0 / reciprocal) } else { Phi::Unbounded { reciprocal } })
}

/// Closed form at `T = 1`: `1/phi = (2 - nu)/6 + 8 nu (R - 1/4)^2`, with `R`
/// reduced into `[0, 1/2)`.
#[allow(non_snake_case)]
pub fn phi_t1(nu: f64, R: f64) -> f64 {
    let r = R.rem_euclid(0.5);
    let d = r - 0.25;
    1.0 / ((2.0 - nu) / 6.0 + 8.0 * nu * d * d)
}

/// Coefficients `[a3, a2, a1, a0]` of the cubic whose largest root is the
/// global maximum of `phi_nu`.
pub fn max_cubic(nu: f64) -> [f64; 4] {
    let (n2, n3, n4) = (nu * nu, nu * nu * nu, nu * nu * nu * nu);
    [
        n4 - 2.0 * n3 - 3.0 * n2 - 50.0 * nu + 112.0,
        12.0 * n3 + 36.0 * n2 - 18.0 * nu - 528.0,
        24.0 * n2 + 282.0 * nu + 528.0,
        -6.0 * nu - 48.0,
    ]
}

/// Coefficients of the cubic whose middle root is the optimal `T`.
pub fn t_opt_cubic(nu: f64) -> [f64; 4] {
    [2.0 * nu + 2.0, 0.0, -(6.0 * nu + 24.0), 3.0 * nu + 24.0]
}

fn eval(c: &[f64; 4], x: f64) -> f64 {
    ((c[0] * x + c[1]) * x + c[2]) * x + c[3]
}

fn eval_deriv(c: &[f64; 4], x: f64) -> f64 {
    (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2]
}

/// Real roots of a cubic with simple roots, ascending: sign changes on a
/// 1e-3 grid over the Cauchy bound, then bisection and a Newton polish.
pub fn real_roots(c: &[f64; 4]) -> Vec<f64> {
    let bound = 1.0 + c[1..].iter().map(|a| (a / c[0]).abs()).fold(0.0, f64::max);
    let step = 1e-3;
    let steps = (2.0 * bound / step).ceil() as usize;
    let mut roots = Vec::new();
    let mut x0 = -bound;
    let mut f0 = eval(c, x0);
    for i in 1..=steps {
        let x1 = -bound + i as f64 * step;
        let f1 = eval(c, x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            roots.push(refine(c, x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

fn refine(c: &[f64; 4], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(c, lo);
    while hi - lo > 1e-13 * hi.abs().max(1.0) {
        let mid = 0.5 * (lo + hi);
        let fm = eval(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    let d = eval_deriv(c, mid);
    let newton = if d != 0.0 { mid - eval(c, mid) / d } else { mid };
    if newton >= lo && newton <= hi {
        newton
    } else {
        mid
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaxResult {
    pub phi_max: f64,
    pub t_opt: f64,
    /// In `[0, 1/2)`.
    pub r_opt: f64,
}

/// Global maximum of `phi_nu` for `nu` in `[0, 1]` and where it is attained.
pub fn phi_max(nu: f64) -> Result<MaxResult, AsymError> {
    if !(0.0..=1.0).contains(&nu) {
        return Err(AsymError::OutOfRange(nu));
    }
    let phi_max = *real_roots(&max_cubic(nu)).last().ok_or(AsymError::RootNotFound)?;
    let t_roots = real_roots(&t_opt_cubic(nu));
    if t_roots.len() != 3 {
        return Err(AsymError::RootNotFound);
    }
    let t_opt = t_roots[1];
    let r_opt = (0.75 - t_opt / 2.0).rem_euclid(0.5);
    let at_opt = phi(nu, r_opt, t_opt)?.value();
    if (at_opt - phi_max).abs() > 1e-9 {
        return Err(AsymError::Inconsistent { at_opt, root: phi_max });
    }
    Ok(MaxResult { phi_max, t_opt, r_opt })
}
