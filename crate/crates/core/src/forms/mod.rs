// SPDX-License-Identifier: Apache-2.0

//! Binary quadratic forms `a x² + 2b xy + c y²` with determinant `b² − ac`.
//!
//! The middle coefficient is stored halved, as `b`, so the determinant is an
//! integer and no half-integers appear anywhere.

mod pell;
mod represent;

pub use pell::{pell_fundamental, PellSolution};
pub use represent::{
    represents, represents_definite, represents_indefinite, represents_indefinite_in_window, Method,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::kernel::isqrt;
use crate::serde_decimal;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub struct BinaryForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    det: BigInt,
}

impl BinaryForm {
    /// The form `a x² + 2b xy + c y²`; note `b` is half the middle coefficient.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let det = &b * &b - &a * &c;
        Self { a, b, c, det }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Half the middle coefficient.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `b² − ac`.
    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a.is_positive() && self.det.is_negative()
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y * 2 + &self.c * y * y
    }

    /// `(a, −2b, c)`: represents `m` at `(x, −y)` wherever `self` does at `(x, y)`.
    pub fn mirrored(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.c.clone())
    }

    /// `(c, 2b, a)`: the same form with the variables swapped.
    pub fn swapped(&self) -> Self {
        Self::new(self.c.clone(), self.b.clone(), self.a.clone())
    }

    /// Any `(r, s)` with `f(r, s) ≤ bound` has `|s| ≤ ⌊√(bound·a/|d|)⌋`.
    ///
    /// Completing the square gives `4a·f(r,s) = (2ar + 2bs)² + 4|d|s²`.
    pub fn y_bound(&self, bound: &BigInt) -> Result<BigInt> {
        if !self.is_positive_definite() {
            return Err(domain(format!("{self} is not positive definite")));
        }
        if !bound.is_positive() {
            return Err(domain(format!("bound must be positive, got {bound}")));
        }
        Ok(isqrt(&((bound * &self.a) / self.det.abs())))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let middle = &self.b * 2;
        let sign = |x: &BigInt| if x.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}x^2 {} {}xy {} {}y^2 (det={})",
            self.a,
            sign(&middle),
            middle.abs(),
            sign(&self.c),
            self.c.abs(),
            self.det
        )
    }
}

/// Parses the command-line form `a,2b,c`, e.g. `20,90,101`.
impl FromStr for BinaryForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, m, c] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected 'a,2b,c', got {s:?}")));
        };
        let num = |t: &str| -> Result<BigInt> {
            if t.is_empty() || t.len() > 4096 {
                return Err(Error::Parse(format!("bad coefficient {t:?}")));
            }
            t.parse().map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
        };
        let (a, middle, c) = (num(a)?, num(m)?, num(c)?);
        if middle.is_odd() {
            return Err(Error::Parse(format!("middle coefficient {middle} must be even")));
        }
        Ok(Self::new(a, middle / 2, c))
    }
}

#[derive(Serialize, Deserialize)]
struct RawForm {
    #[serde(with = "serde_decimal")]
    a: BigInt,
    #[serde(with = "serde_decimal")]
    b: BigInt,
    #[serde(with = "serde_decimal")]
    c: BigInt,
    #[serde(with = "serde_decimal")]
    det: BigInt,
}

impl From<BinaryForm> for RawForm {
    fn from(f: BinaryForm) -> Self {
        Self { a: f.a, b: f.b, c: f.c, det: f.det }
    }
}

impl TryFrom<RawForm> for BinaryForm {
    type Error = Error;

    fn try_from(raw: RawForm) -> Result<Self> {
        let f = BinaryForm::new(raw.a, raw.b, raw.c);
        if f.det != raw.det {
            return Err(Error::Parse(format!("stated determinant {} but b² − ac = {}", raw.det, f.det)));
        }
        Ok(f)
    }
}

/// A solution of `f(x, y) = value`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    #[serde(with = "serde_decimal")]
    pub x: BigInt,
    #[serde(with = "serde_decimal")]
    pub y: BigInt,
    #[serde(with = "serde_decimal")]
    pub value: BigInt,
}

impl Representation {
    pub fn holds_for(&self, f: &BinaryForm) -> bool {
        f.evaluate(&self.x, &self.y) == self.value
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({}, {}) = {}", self.x, self.y, self.value)
    }
}
