//! Littlewood (+1/-1) sequences derived from cyclic difference sets and
//! almost difference sets over finite fields.
//!
//! * [`ff`]: finite fields with pinned generators, traces and characters.
//! * [`charsums`]: Gauss, Jacobi and Eisenstein sums.
//! * [`sets`]: cyclotomic, Hall, Gordon-Mills-Welch and Sidelnikov sets.
//! * [`seq`]: shifted/truncated sequences, aperiodic autocorrelation, merit factor.
//! * [`asym`]: the limiting merit-factor function and its maximum.
//! * [`spectral`]: four-fold correlations `L_f` and periodic autocorrelation profiles.

pub mod asym;
pub mod charsums;
pub mod ff;
pub mod seq;
pub mod sets;
pub mod spectral;

pub use ff::{FieldCtx, FieldElem, FieldError, MultChar};
