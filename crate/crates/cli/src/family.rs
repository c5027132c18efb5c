//! Turning set flags into a constructed subset.

use anyhow::{anyhow, bail, Context, Result};
use merit_core::sets::{self, SubsetOfGroup};
use merit_core::FieldCtx;

use crate::args::{FamilyArgs, FamilyName};

/// Nesting limit for `gmw:<s>:<inner>` inner specs.
pub const MAX_INNER_DEPTH: usize = 3;

/// A constructed set, with the field it was built over.
pub struct Built {
    pub set: SubsetOfGroup,
    pub field: FieldCtx,
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("MissingParameter: --{flag} is required for {family}"))
}

pub fn build(args: &FamilyArgs) -> Result<Built> {
    let family = args.family.ok_or_else(|| anyhow!("MissingParameter: --family is required"))?;
    match family {
        FamilyName::Paley => {
            let field = FieldCtx::prime(need(args.p, "p", "paley")?)?;
            Ok(Built { set: sets::build_paley(&field)?, field })
        }
        FamilyName::Hall => {
            let field = FieldCtx::prime(need(args.p, "p", "hall")?)?;
            Ok(Built { set: sets::build_hall(&field)?, field })
        }
        FamilyName::Cyclotomic => {
            let field = FieldCtx::prime(need(args.p, "p", "cyclotomic")?)?;
            let m = need(args.m, "m", "cyclotomic")?;
            Ok(Built { set: sets::build_cyclotomic(&field, m, &args.classes)?, field })
        }
        FamilyName::Singer => {
            let field = FieldCtx::with_order(need(args.q, "q", "singer")?)?;
            Ok(Built { set: sets::build_singer(&field)?, field })
        }
        FamilyName::Gmw => {
            let field = FieldCtx::with_order(need(args.q, "q", "gmw")?)?;
            let s = need(args.s, "s", "gmw")?;
            let inner = inner_set(args.inner.as_deref().unwrap_or("singer"), s, 1)?;
            Ok(Built { set: sets::build_gmw(&field, s, &inner)?, field })
        }
        FamilyName::Sidelnikov => {
            let field = FieldCtx::with_order(need(args.q, "q", "sidelnikov")?)?;
            Ok(Built { set: sets::build_sidelnikov(&field)?, field })
        }
    }
}

/// Inner set `B` in the cyclic group of order `s - 1`. `paley` and `hall`
/// use the complement (containing 0) of the set in Z/(s-1), which has the
/// required size s/2 when s - 1 is a suitable prime.
pub fn inner_set(spec: &str, s: u64, depth: usize) -> Result<SubsetOfGroup> {
    if depth > MAX_INNER_DEPTH {
        bail!("BadInner: nesting deeper than {MAX_INNER_DEPTH}");
    }
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match (head, rest) {
        ("trivial", "") => {
            if s != 2 {
                bail!("BadInner: trivial inner set needs s = 2, got {s}");
            }
            Ok(sets::trivial_inner())
        }
        ("singer", "") => {
            if s == 2 {
                return Ok(sets::trivial_inner());
            }
            Ok(sets::build_singer(&FieldCtx::with_order(s)?)?)
        }
        ("paley", "") => Ok(sets::build_paley(&FieldCtx::prime(s - 1)?)?.complement()),
        ("hall", "") => Ok(sets::build_hall(&FieldCtx::prime(s - 1)?)?.complement()),
        ("gmw", rest) => {
            let (sub, inner) = rest
                .split_once(':')
                .ok_or_else(|| anyhow!("BadInner: expected gmw:<s>:<inner>, got {spec:?}"))?;
            let sub: u64 = sub.parse().with_context(|| format!("BadInner: subfield order {sub:?}"))?;
            let b = inner_set(inner, sub, depth + 1)?;
            Ok(sets::build_gmw(&FieldCtx::with_order(s)?, sub, &b)?)
        }
        _ => bail!("BadInner: unknown inner set {spec:?}"),
    }
}
