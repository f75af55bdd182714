// SPDX-License-Identifier: Apache-2.0

//! Brute-force deciders used to cross-check the representation method.
//!
//! Membership here is tested by solving `δx = q(a + b√D) + (n + √D)(c + d√D)`
//! over every residue pair `(c, d)`, not by the congruence used elsewhere.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{domain, Result};
use crate::forms::{pell_fundamental, BinaryForm, Representation};
use crate::ideal::SplitPrimeIdeal;

const MAX_BOX: i64 = 10_000;
const MAX_Q: i64 = 100;

fn isqrt_exact(m: i128) -> Option<i128> {
    if m < 0 {
        return None;
    }
    let mut r = (m as f64).sqrt() as i128;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    (r * r == m).then_some(r)
}

struct Small {
    d: i128,
    delta: i128,
    q: i128,
    n: i128,
}

impl Small {
    fn of(ideal: &SplitPrimeIdeal) -> Self {
        let field = ideal.field();
        Self {
            d: field.radicand() as i128,
            delta: field.delta() as i128,
            q: ideal.q().to_i128().expect("budget checked"),
            n: ideal.n().to_i128().expect("budget checked"),
        }
    }

    /// Is `(u + v√D)/δ` of the form `qα + (n + √D)β` with `α, β` integral?
    fn member(&self, u: i128, v: i128) -> bool {
        let Small { d, delta, q, n } = *self;
        let range = delta * q;
        for c in 0..range {
            for dd in 0..range {
                if delta == 2 && (c - dd) % 2 != 0 {
                    continue;
                }
                let (ra, rb) = (u - n * c - dd * d, v - c - n * dd);
                if ra % q != 0 || rb % q != 0 {
                    continue;
                }
                let (a, b) = (ra / q, rb / q);
                if delta == 1 || (a - b) % 2 == 0 {
                    return true;
                }
            }
        }
        false
    }

    /// Numerators `(u, v)` with `u² − Dv² = δ²·norm` and `|v| ≤ v_max`, in
    /// order of increasing `|v|`.
    fn search(&self, norms: &[i128], v_max: i128) -> Option<(i128, i128)> {
        let Small { d, delta, .. } = *self;
        for v_abs in 0..=v_max {
            for v in [v_abs, -v_abs] {
                for &norm in norms {
                    if let Some(u) = isqrt_exact(delta * delta * norm + d * v * v) {
                        for u in [u, -u] {
                            if (u - v) % delta == 0 && self.member(u, v) {
                                return Some((u, v));
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// Searches directly for an element of norm `±q` lying in `ideal`.
///
/// Imaginary fields: `|D| ≤ 50`, complete over `u² + |D|v² ≤ δ²q`.
/// Real fields: `D ≤ 30`, searched over `|u|, |v| ≤ 10·q·T` with `T` from the
/// fundamental Pell solution. In both cases `q ≤ 100`.
pub fn oracle_generator(ideal: &SplitPrimeIdeal) -> Result<Option<(BigInt, BigInt)>> {
    let radicand = ideal.field().radicand();
    let in_budget = if radicand < 0 { radicand >= -50 } else { radicand <= 30 };
    if !in_budget || ideal.q() > &BigInt::from(MAX_Q) {
        return Err(domain(format!("{ideal} is outside the oracle budget")));
    }
    let s = Small::of(ideal);
    let found = if radicand < 0 {
        let v_max = ((s.delta * s.delta * s.q) as f64 / -s.d as f64).sqrt() as i128 + 1;
        s.search(&[s.q], v_max)
    } else {
        let t = pell_fundamental(&BigInt::from(radicand))?.t.to_i128().expect("small radicand");
        s.search(&[s.q, -s.q], 10 * s.q * t)
    };
    Ok(found.map(|(u, v)| (BigInt::from(u), BigInt::from(v))))
}

pub fn oracle_principal(ideal: &SplitPrimeIdeal) -> Result<bool> {
    Ok(oracle_generator(ideal)?.is_some())
}

/// Looks for `f(x, y) = target` with `|x|, |y| ≤ bound`, `bound ≤ 10⁴`.
///
/// Sound, and complete only inside the box. Ties follow the engine:
/// smallest `|y|`, then `|x|`, then nonnegative `y`, then nonnegative `x`.
pub fn oracle_represents(f: &BinaryForm, target: &BigInt, bound: i64) -> Result<Option<Representation>> {
    if !(0..=MAX_BOX).contains(&bound) {
        return Err(domain(format!("box {bound} outside [0, {MAX_BOX}]")));
    }
    let coef = |c: &BigInt| c.to_i128().filter(|c| c.abs() < 1 << 60);
    let (Some(a), Some(b), Some(c), Some(m)) = (coef(f.a()), coef(f.b()), coef(f.c()), coef(target)) else {
        return Err(domain("coefficients too large for the oracle"));
    };
    let bound = bound as i128;
    for y_abs in 0..=bound {
        for x_abs in 0..=bound {
            for y in [y_abs, -y_abs] {
                for x in [x_abs, -x_abs] {
                    if a * x * x + 2 * b * x * y + c * y * y == m {
                        return Ok(Some(Representation {
                            x: BigInt::from(x),
                            y: BigInt::from(y),
                            value: target.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
