// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::kernel::{exact_sqrt, isqrt};
use crate::serde_decimal;

/// The least positive solution of `T² − D·U² = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolution {
    #[serde(with = "serde_decimal")]
    pub t: BigInt,
    #[serde(with = "serde_decimal")]
    pub u: BigInt,
}

/// Walks the continued fraction of `√D` until a convergent solves the Pell equation.
pub fn pell_fundamental(d: &BigInt) -> Result<PellSolution> {
    if !d.is_positive() {
        return Err(domain(format!("Pell equation needs D > 0, got {d}")));
    }
    if exact_sqrt(d).is_some() {
        return Err(domain(format!("Pell equation needs a non-square D, got {d}")));
    }
    let a0 = isqrt(d);
    let (mut m, mut q, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - d * &k * &k == BigInt::one() {
            return Ok(PellSolution { t: h, u: k });
        }
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}
