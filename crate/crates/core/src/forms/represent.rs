// SPDX-License-Identifier: Apache-2.0

//! Deciding whether a form represents an integer.
//!
//! Both paths rest on `a·f(x, y) = (ax + by)² − d·y²`: a representation of
//! `m` is a solution of `t² − d·y² = a·m` with `t ≡ b·y (mod a)`, and then
//! `x = (t − by)/a`. Only `y` has to be enumerated; `t` is an exact square
//! root. Positive definite forms need `|y|` up to the completed-square bound.
//! Indefinite forms need one representative per orbit of the automorph
//! group, and every orbit has one with `y² ≤ |a·m|·(T+1)/(2d)`, where
//! `(T, U)` is the fundamental Pell solution for `d`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{pell_fundamental, BinaryForm, Representation};
use crate::error::{domain, Result};
use crate::kernel::{exact_sqrt, isqrt};

/// Upper limit on `|y|` for a single search.
const MAX_WINDOW: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DefiniteEnumeration,
    IndefiniteWindow,
}

impl Method {
    pub fn for_form(f: &BinaryForm) -> Result<Self> {
        let d = f.determinant();
        if d.is_negative() {
            if !f.a().is_positive() {
                return Err(domain(format!("{f} is negative definite")));
            }
            Ok(Method::DefiniteEnumeration)
        } else if d.is_zero() || exact_sqrt(d).is_some() {
            Err(domain(format!("{f} has a square determinant")))
        } else {
            Ok(Method::IndefiniteWindow)
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DefiniteEnumeration => "definite enumeration",
            Method::IndefiniteWindow => "indefinite window",
        })
    }
}

/// Finds a representation with `|y| ≤ y_max`.
///
/// Ties are broken toward the smallest `|y|`, then the smallest `|x|`, then
/// nonnegative `y`, then nonnegative `x`.
fn search(f: &BinaryForm, target: &BigInt, y_max: &BigInt) -> Result<Option<Representation>> {
    let y_max = y_max
        .to_u64()
        .filter(|&y| y <= MAX_WINDOW)
        .ok_or_else(|| domain(format!("search window |y| ≤ {y_max} is beyond the supported size")))?;
    let (a, b, d) = (f.a(), f.b(), f.determinant());
    let am = a * target;
    for y_abs in 0..=y_max {
        let y_abs = BigInt::from(y_abs);
        let rhs = &am + d * &y_abs * &y_abs;
        let Some(s) = exact_sqrt(&rhs) else {
            continue;
        };
        let mut found: Vec<(BigInt, BigInt)> = Vec::new();
        let ys = if y_abs.is_zero() { vec![y_abs.clone()] } else { vec![y_abs.clone(), -&y_abs] };
        let ts = if s.is_zero() { vec![s.clone()] } else { vec![s.clone(), -&s] };
        for y in &ys {
            for t in &ts {
                let (x, r) = (t - b * y).div_rem(a);
                if r.is_zero() {
                    found.push((x, y.clone()));
                }
            }
        }
        if let Some((x, y)) = found
            .into_iter()
            .min_by_key(|(x, y)| (x.abs(), y.is_negative(), x.is_negative()))
        {
            let rep = Representation { x, y, value: target.clone() };
            debug_assert!(rep.holds_for(f));
            return Ok(Some(rep));
        }
    }
    Ok(None)
}

/// Decides whether a positive definite form represents `target > 0`.
pub fn represents_definite(f: &BinaryForm, target: &BigInt) -> Result<Option<Representation>> {
    if !target.is_positive() {
        return Err(domain(format!("definite search needs a positive target, got {target}")));
    }
    let y_max = f.y_bound(target)?;
    search(f, target, &y_max)
}

/// Decides whether an indefinite form with non-square determinant represents `target ≠ 0`.
pub fn represents_indefinite(f: &BinaryForm, target: &BigInt) -> Result<Option<Representation>> {
    represents_indefinite_in_window(f, target, &BigInt::one())
}

/// As [`represents_indefinite`], with the `y` window scaled by `factor ≥ 1`
/// (the window is `y² ≤ factor·max(|a·m|, 1)·(T+1)/(2d)`).
pub fn represents_indefinite_in_window(
    f: &BinaryForm,
    target: &BigInt,
    factor: &BigInt,
) -> Result<Option<Representation>> {
    if Method::for_form(f)? != Method::IndefiniteWindow {
        return Err(domain(format!("{f} is not indefinite")));
    }
    if target.is_zero() {
        return Err(domain("target must be nonzero"));
    }
    if factor < &BigInt::one() {
        return Err(domain(format!("window factor must be at least 1, got {factor}")));
    }
    let d = f.determinant();
    let pell = pell_fundamental(d)?;
    let scale = (f.a() * target).abs().max(BigInt::one());
    let y_max = isqrt(&((factor * scale * (&pell.t + 1u32)) / (d * 2)));
    search(f, target, &y_max)
}

/// The first target, in the order given, that `f` represents.
///
/// Non-positive targets are skipped for positive definite forms, which
/// cannot represent them. Zero targets are rejected.
pub fn represents(f: &BinaryForm, targets: &[BigInt]) -> Result<Option<Representation>> {
    let method = Method::for_form(f)?;
    for target in targets {
        if target.is_zero() {
            return Err(domain("target must be nonzero"));
        }
        let found = match method {
            Method::DefiniteEnumeration if !target.is_positive() => None,
            Method::DefiniteEnumeration => represents_definite(f, target)?,
            Method::IndefiniteWindow => represents_indefinite(f, target)?,
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
