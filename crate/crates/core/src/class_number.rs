// SPDX-License-Identifier: Apache-2.0

//! Deciding class number one for imaginary quadratic fields, with
//! certificates that can be checked without trusting this crate.
//!
//! The decision for `D ≡ 1 (mod 4)` is made by the Rabinowitsch criterion:
//! `h = 1` iff `X² − X + (1 − D)/4` is prime for `1 ≤ X < (1 − D)/4`. The
//! explicit non-principal ideals built from small factorizations of `|D| + 1`,
//! `|D| + 4` and `|D| + 9` are produced alongside it and must agree.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::field::QuadraticField;
use crate::forms::BinaryForm;
use crate::ideal::SplitPrimeIdeal;
use crate::kernel::{is_prime, is_prime_u64, is_squarefree, jacobi_u64, largest_odd_prime_factor, smallest_prime_factor, sqrt_mod_u64};
use crate::serde_decimal;

/// One evaluation of the Rabinowitsch polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RabinowitschRow {
    pub x: u64,
    #[serde(with = "serde_decimal")]
    pub value: BigInt,
    pub prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Evidence {
    /// Every value of the polynomial on its range, all prime.
    RabinowitschTable { rows: Vec<RabinowitschRow> },
    /// A composite value of the polynomial with a nontrivial factor.
    RabinowitschComposite {
        x: u64,
        #[serde(with = "serde_decimal")]
        value: BigInt,
        #[serde(with = "serde_decimal")]
        factor: BigInt,
    },
    /// A split prime ideal `(q, n + √D)` whose form does not represent `δ²`.
    NonPrincipalIdeal {
        #[serde(with = "serde_decimal")]
        q: BigInt,
        #[serde(with = "serde_decimal")]
        n: BigInt,
        form: BinaryForm,
    },
    /// `D ∈ {−1, −2, −3}`, discriminants `−4, −8, −3`.
    SpecialDiscriminant { discriminant: i64 },
    /// A discriminant `≢ 1 (mod 4)` other than `−4, −8`.
    NotOneMod4,
    /// `|D|` is composite with `D ≡ 1 (mod 4)`.
    CompositeAbsD {
        #[serde(with = "serde_decimal")]
        factor: BigInt,
    },
}

/// Verdict on "does `Q(√D)` have class number 1?" with its evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H1Certificate {
    pub radicand: i64,
    pub verdict: bool,
    pub evidence: Evidence,
    /// Independent evidence for the same verdict, when one was produced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corroboration: Option<Evidence>,
}

impl H1Certificate {
    fn new(radicand: i64, verdict: bool, evidence: Evidence) -> Self {
        Self { radicand, verdict, evidence, corroboration: None }
    }

    /// Re-checks every claim in the certificate from scratch.
    pub fn validate(&self) -> Result<()> {
        let d = self.radicand;
        if d >= 0 || !is_squarefree(d) {
            return Err(domain(format!("D = {d} is not a negative squarefree integer")));
        }
        check_evidence(d, self.verdict, &self.evidence)?;
        if let Some(extra) = &self.corroboration {
            check_evidence(d, self.verdict, extra)?;
        }
        Ok(())
    }
}

fn rabinowitsch_constant(d: i64) -> u64 {
    ((1 - d as i128) / 4) as u64
}

fn rabinowitsch_value(x: u64, constant: u64) -> BigInt {
    let x = BigInt::from(x);
    &x * &x - &x + constant
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Domain(format!("invalid certificate: {}", msg.into()))
}

fn check_evidence(d: i64, verdict: bool, evidence: &Evidence) -> Result<()> {
    let one_mod_4 = d.rem_euclid(4) == 1;
    match evidence {
        Evidence::SpecialDiscriminant { discriminant } => {
            let expected = match d {
                -1 => -4,
                -2 => -8,
                -3 => -3,
                _ => return Err(bad(format!("D = {d} has no special discriminant"))),
            };
            if *discriminant != expected || !verdict {
                return Err(bad("special discriminant mismatch"));
            }
        }
        Evidence::RabinowitschTable { rows } => {
            if !verdict || !one_mod_4 {
                return Err(bad("a prime table certifies class number one for D ≡ 1 (mod 4) only"));
            }
            let constant = rabinowitsch_constant(d);
            if rows.len() as u64 != constant.saturating_sub(1) {
                return Err(bad(format!("table has {} rows, expected {}", rows.len(), constant - 1)));
            }
            for (i, row) in rows.iter().enumerate() {
                if row.x != i as u64 + 1 || row.value != rabinowitsch_value(row.x, constant) {
                    return Err(bad(format!("row {} is wrong", i + 1)));
                }
                if !row.prime || !is_prime(&row.value) {
                    return Err(bad(format!("{} is not prime", row.value)));
                }
            }
        }
        Evidence::RabinowitschComposite { x, value, factor } => {
            let constant = rabinowitsch_constant(d);
            if verdict || !one_mod_4 || *x == 0 || *x >= constant {
                return Err(bad("composite value out of range"));
            }
            if *value != rabinowitsch_value(*x, constant) {
                return Err(bad(format!("F({x}) is not {value}")));
            }
            if factor <= &BigInt::one() || factor >= value || !(value % factor).is_zero() {
                return Err(bad(format!("{factor} is not a proper factor of {value}")));
            }
        }
        Evidence::NonPrincipalIdeal { q, n, form } => {
            if verdict {
                return Err(bad("a non-principal ideal cannot certify class number one"));
            }
            let field = QuadraticField::new(d)?;
            let ideal = SplitPrimeIdeal::new(field, q.clone(), n.clone())?;
            if &ideal.associated_form() != form {
                return Err(bad(format!("form of {ideal} is not {form}")));
            }
            if ideal.is_principal()?.verdict {
                return Err(bad(format!("{ideal} is principal")));
            }
        }
        Evidence::NotOneMod4 => {
            if verdict || one_mod_4 || d >= -2 {
                return Err(bad("NotOneMod4 needs D ≡ 2, 3 (mod 4) and |D| > 2"));
            }
        }
        Evidence::CompositeAbsD { factor } => {
            let abs_d = BigInt::from(d).abs();
            if verdict || !one_mod_4 || factor <= &BigInt::one() || factor >= &abs_d || !(&abs_d % factor).is_zero() {
                return Err(bad(format!("{factor} is not a proper factor of |D|")));
            }
        }
    }
    Ok(())
}

fn require_imaginary(d: i64) -> Result<QuadraticField> {
    if d >= 0 {
        return Err(domain(format!("D = {d} must be negative")));
    }
    QuadraticField::new(d)
}

/// Evaluates `X² − X + (1 − d)/4` for `X = 1, …, (1 − d)/4 − 1`.
///
/// `d` must be a negative squarefree discriminant `≡ 1 (mod 4)`; `d = −3`
/// is answered by `SpecialDiscriminant`.
pub fn rabinowitsch(d: i64) -> Result<H1Certificate> {
    if d >= 0 || d.rem_euclid(4) != 1 {
        return Err(domain(format!("d = {d} is not a negative discriminant ≡ 1 (mod 4)")));
    }
    require_imaginary(d)?;
    if d == -3 {
        return Ok(H1Certificate::new(d, true, Evidence::SpecialDiscriminant { discriminant: -3 }));
    }
    let constant = rabinowitsch_constant(d);
    let mut rows = Vec::new();
    for x in 1..constant {
        let value = rabinowitsch_value(x, constant);
        let prime = match value.to_u64() {
            Some(v) => is_prime_u64(v),
            None => is_prime(&value),
        };
        if !prime {
            let factor = smallest_prime_factor(&value).expect("value above 1");
            return Ok(H1Certificate::new(d, false, Evidence::RabinowitschComposite { x, value, factor }));
        }
        rows.push(RabinowitschRow { x, value, prime });
    }
    Ok(H1Certificate::new(d, true, Evidence::RabinowitschTable { rows }))
}

/// Why `|D| = 4p − 1` does or does not meet the necessary conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryConditions {
    pub holds: bool,
    pub p: Option<u64>,
    pub reason: String,
}

/// Necessary conditions for class number one when `D ≡ 1 (mod 4)`, `|D| > 16`:
/// `|D| = 4p − 1` with `p ≥ 5` prime, `4p − 1` and `4p + 3` prime, and
/// `p = 5` or `p ≡ 1, 7 (mod 10)`.
pub fn necessary_conditions(d: i64) -> Result<NecessaryConditions> {
    require_imaginary(d)?;
    if d.rem_euclid(4) != 1 || d >= -16 {
        return Err(domain(format!("D = {d} must be ≡ 1 (mod 4) with |D| > 16")));
    }
    let abs_d = d.unsigned_abs();
    let p = (abs_d + 1) / 4;
    let fail = |reason: String| Ok(NecessaryConditions { holds: false, p: Some(p), reason });
    if !is_prime_u64(p) {
        return fail(format!("(|D| + 1)/4 = {p} is not prime"));
    }
    if !is_prime_u64(abs_d) {
        return fail(format!("4p − 1 = {abs_d} is not prime"));
    }
    if !is_prime_u64(4 * p + 3) {
        return fail(format!("4p + 3 = {} is not prime", 4 * p + 3));
    }
    if p != 5 && p % 10 != 1 && p % 10 != 7 {
        return fail(format!("p = {p} is ≡ {} (mod 10)", p % 10));
    }
    Ok(NecessaryConditions { holds: true, p: Some(p), reason: format!("p = {p} meets every condition") })
}

/// Least `n ≡ 0 (mod 6)`, `1 ≤ n ≤ (p − 1)/4`, with `4n − 1` and `p − n`
/// distinct primes. Exists for every prime `p > 619` with `4p − 1` prime.
pub fn find_prime_pair_shift(p: u64) -> Result<u64> {
    if p <= 619 || !is_prime_u64(p) || !is_prime_u64(4 * p - 1) {
        return Err(domain(format!("p = {p} must be a prime above 619 with 4p − 1 prime")));
    }
    (6..=(p - 1) / 4)
        .step_by(6)
        .find(|&n| is_prime_u64(4 * n - 1) && is_prime_u64(p - n) && 4 * n - 1 != p - n)
        .ok_or_else(|| Error::Invariant(format!("no prime pair below p = {p}")))
}

/// The odd primes `q < p` that are quadratic residues modulo the prime `4p − 1`.
pub fn residue_witnesses(p: u64) -> Result<Vec<u64>> {
    if p < 5 || !is_prime_u64(p) || !is_prime_u64(4 * p - 1) {
        return Err(domain(format!("p = {p} must be a prime ≥ 5 with 4p − 1 prime")));
    }
    Ok((3..p)
        .step_by(2)
        .filter(|&q| is_prime_u64(q) && jacobi_u64(q as i64, 4 * p - 1) == 1)
        .collect())
}

/// For a residue witness `q`, the least `n ∈ [1, q)` with `q | n² − n + p`,
/// together with `n² − n + p`.
pub fn rabinowitsch_root(p: u64, q: u64) -> Result<(u64, BigInt)> {
    let disc = 1 - 4 * p as i64;
    let s = sqrt_mod_u64(disc, q)?.ok_or_else(|| domain(format!("1 − 4p is not a square modulo {q}")))?;
    let half = q.div_ceil(2);
    let r1 = ((1 + s) % q) * half % q;
    let r2 = ((1 + q - s) % q) * half % q;
    let n = r1.min(r2);
    let value = rabinowitsch_value(n, p);
    debug_assert!((&value % q).is_zero());
    Ok((n, value))
}

fn residue_certificate(p: u64) -> Result<Option<Evidence>> {
    let Some(&q) = residue_witnesses(p)?.first() else {
        return Ok(None);
    };
    let (x, value) = rabinowitsch_root(p, q)?;
    if value <= BigInt::from(q) {
        return Err(Error::Invariant(format!("F({x}) = {value} is not above {q}")));
    }
    Ok(Some(Evidence::RabinowitschComposite { x, value, factor: BigInt::from(q) }))
}

/// `(q, n + √D)` as evidence, provided it really is not principal.
fn ideal_witness(field: QuadraticField, q: u64, n: u64) -> Result<Option<Evidence>> {
    let ideal = SplitPrimeIdeal::new(field, BigInt::from(q), BigInt::from(n % q))?;
    if ideal.is_principal()?.verdict {
        return Ok(None);
    }
    Ok(Some(Evidence::NonPrincipalIdeal {
        q: ideal.q().clone(),
        n: ideal.n().clone(),
        form: ideal.associated_form(),
    }))
}

fn smallest_factor_u64(m: u64) -> u64 {
    smallest_prime_factor(&BigInt::from(m)).and_then(|f| f.to_u64()).unwrap_or(m)
}

/// Constructs explicit evidence that `Q(√D)` has class number above 1.
///
/// For `D ≡ 2, 3 (mod 4)` the ideal over the largest odd prime factor of
/// `|D| + 4` or `|D| + 1` is used. For `D ≡ 1 (mod 4)` the case analysis on
/// `|D| + 4 = l·q` picks one of the ideals `(q, 2 + √D)`, `(p, 3 + √D)`,
/// `(p, 1 + √D)`; when `|D| + 1 = 4p`, a prime `q < p` that is a residue
/// modulo `4p − 1` exhibits a composite Rabinowitsch value instead.
/// Returns `None` when no evidence exists, i.e. when the class number is 1.
pub fn nonprincipality_certificate(d: i64) -> Result<Option<H1Certificate>> {
    let field = require_imaginary(d)?;
    if d >= -2 {
        return Err(domain(format!("D = {d} must satisfy |D| > 2")));
    }
    let abs_d = d.unsigned_abs();
    let evidence = match d.rem_euclid(4) {
        2 | 3 => {
            let shift = if d.rem_euclid(4) == 2 { 2 } else { 1 };
            let m = abs_d + shift * shift;
            let q = largest_odd_prime_factor(m).expect("n² + |D| is not a power of 2");
            let l = m / q;
            let found = if 1 < l && l < abs_d { ideal_witness(field, q, shift)? } else { None };
            Some(found.unwrap_or(Evidence::NotOneMod4))
        }
        _ => one_mod_4_evidence(field, d)?,
    };
    Ok(evidence.map(|e| H1Certificate::new(d, false, e)))
}

fn one_mod_4_evidence(field: QuadraticField, d: i64) -> Result<Option<Evidence>> {
    let abs_d = d.unsigned_abs();
    let composite = || {
        (!is_prime_u64(abs_d)).then(|| Evidence::CompositeAbsD { factor: BigInt::from(smallest_factor_u64(abs_d)) })
    };
    if abs_d <= 16 {
        return Ok(composite());
    }
    let m = abs_d + 4;
    let q = largest_odd_prime_factor(m).expect("|D| + 4 is odd");
    let l = m / q;
    let constructed = if q % 4 == 1 {
        let l_is_square = crate::kernel::exact_sqrt_u64(l).is_some();
        if !l_is_square && 4 * l < abs_d {
            ideal_witness(field, q, 2)?
        } else {
            None
        }
    } else if q < abs_d {
        if l >= 5 && 4 * q < abs_d {
            ideal_witness(field, q, 2)?
        } else {
            None
        }
    } else if (abs_d + 1).is_power_of_two() {
        if let Some(c) = composite() {
            return Ok(Some(c));
        }
        let half = (abs_d + 1) / 8 + 1;
        let p = largest_odd_prime_factor(half).expect("2^k + 1 is odd");
        let cofactor = (abs_d + 9) / p;
        if cofactor.is_multiple_of(8) && 4 * p < abs_d && !abs_d.is_multiple_of(p) {
            ideal_witness(field, p, 3)?
        } else {
            None
        }
    } else {
        let p = largest_odd_prime_factor(abs_d + 1).expect("not a power of 2");
        let cofactor = (abs_d + 1) / p;
        if cofactor >= 8 {
            if 4 * p < abs_d {
                ideal_witness(field, p, 1)?
            } else {
                None
            }
        } else {
            if let Some(c) = composite() {
                return Ok(Some(c));
            }
            return residue_certificate(p);
        }
    };
    match constructed {
        Some(e) => Ok(Some(e)),
        None => Ok(match rabinowitsch(d)?.evidence {
            e @ Evidence::RabinowitschComposite { .. } => Some(e),
            _ => None,
        }),
    }
}

/// Class number one, decided and certified.
pub fn classify_h1(d: i64) -> Result<H1Certificate> {
    require_imaginary(d)?;
    let special = match d {
        -1 => Some(-4),
        -2 => Some(-8),
        -3 => Some(-3),
        _ => None,
    };
    if let Some(discriminant) = special {
        return Ok(H1Certificate::new(d, true, Evidence::SpecialDiscriminant { discriminant }));
    }
    if d.rem_euclid(4) != 1 {
        return nonprincipality_certificate(d)?
            .ok_or_else(|| Error::Invariant(format!("no witness for D = {d}")));
    }
    let mut cert = rabinowitsch(d)?;
    let witness = nonprincipality_certificate(d)?;
    if cert.verdict == witness.is_some() {
        return Err(Error::Invariant(format!(
            "D = {d}: Rabinowitsch says h = 1 is {}, the witness search disagrees",
            cert.verdict
        )));
    }
    cert.corroboration = witness.map(|w| w.evidence);
    Ok(cert)
}

/// Certificates for every squarefree `D` with `min ≤ |D| ≤ max`, ascending in `|D|`.
///
/// Runs on the current rayon pool; the order does not depend on it.
pub fn scan_h1(min_abs_d: u64, max_abs_d: u64) -> Result<Vec<H1Certificate>> {
    if min_abs_d == 0 || min_abs_d > max_abs_d || max_abs_d > i64::MAX as u64 {
        return Err(domain(format!("invalid range [{min_abs_d}, {max_abs_d}]")));
    }
    (min_abs_d..=max_abs_d)
        .into_par_iter()
        .map(|a| -(a as i64))
        .filter(|&d| is_squarefree(d))
        .map(classify_h1)
        .collect()
}

/// The radicands with a verdict of class number one.
pub fn class_number_one(certs: &[H1Certificate]) -> Vec<i64> {
    certs.iter().filter(|c| c.verdict).map(|c| c.radicand).collect()
}
