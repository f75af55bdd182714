// SPDX-License-Identifier: Apache-2.0

//! Quadratic fields `Q(√D)` and exact arithmetic in their rings of integers.
//!
//! An element is stored by its numerator coordinates `(u, v)` and means
//! `(u + v√D)/δ`, where `δ = 2` when `D ≡ 1 (mod 4)` and `δ = 1` otherwise.
//! For `δ = 2` the coordinates satisfy `u ≡ v (mod 2)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::kernel::is_squarefree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    radicand: i64,
    delta: u8,
}

impl QuadraticField {
    /// Validates that `d` is squarefree and not `0` or `1`.
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(domain(format!("D = {d} does not define a quadratic field")));
        }
        if !is_squarefree(d) {
            return Err(domain(format!("D = {d} is not squarefree")));
        }
        let delta = if d.rem_euclid(4) == 1 { 2 } else { 1 };
        Ok(Self { radicand: d, delta })
    }

    /// The squarefree radicand `D`.
    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn radicand_big(&self) -> BigInt {
        BigInt::from(self.radicand)
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }

    pub fn delta_big(&self) -> BigInt {
        BigInt::from(self.delta)
    }

    /// `D` when `D ≡ 1 (mod 4)`, else `4D`.
    pub fn discriminant(&self) -> BigInt {
        if self.delta == 2 {
            self.radicand_big()
        } else {
            self.radicand_big() * 4
        }
    }

    pub fn is_imaginary(&self) -> bool {
        self.radicand < 0
    }

    pub fn zero(&self) -> QuadraticInteger {
        QuadraticInteger { u: BigInt::zero(), v: BigInt::zero(), field: *self }
    }

    /// The rational integer `k` as an element.
    pub fn integer(&self, k: impl Into<BigInt>) -> QuadraticInteger {
        QuadraticInteger { u: k.into() * self.delta, v: BigInt::zero(), field: *self }
    }

    /// `(u + v√D)/δ`, checking the parity condition when `δ = 2`.
    pub fn element(&self, u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<QuadraticInteger> {
        QuadraticInteger::new(*self, u.into(), v.into())
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(√{})", self.radicand)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInteger {
    u: BigInt,
    v: BigInt,
    field: QuadraticField,
}

impl QuadraticInteger {
    pub fn new(field: QuadraticField, u: BigInt, v: BigInt) -> Result<Self> {
        if field.delta == 2 && u.is_odd() != v.is_odd() {
            return Err(domain(format!("({u}+{v}√{})/2 is not an algebraic integer", field.radicand)));
        }
        Ok(Self { u, v, field })
    }

    /// Numerator coordinate of the rational part.
    pub fn u(&self) -> &BigInt {
        &self.u
    }

    /// Numerator coordinate of the `√D` part.
    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `N(x) = (u² − D v²)/δ²`, always an integer.
    pub fn norm(&self) -> BigInt {
        let num = &self.u * &self.u - self.field.radicand_big() * &self.v * &self.v;
        let den = BigInt::from(self.field.delta) * self.field.delta;
        debug_assert!((&num % &den).is_zero());
        num / den
    }

    pub fn trace(&self) -> BigInt {
        if self.field.delta == 2 {
            self.u.clone()
        } else {
            &self.u * 2
        }
    }

    pub fn conj(&self) -> Self {
        Self { u: self.u.clone(), v: -&self.v, field: self.field }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(domain(format!("mixed fields {} and {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self { u: &self.u + &other.u, v: &self.v + &other.v, field: self.field })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self { u: &self.u - &other.u, v: &self.v - &other.v, field: self.field })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = self.field.radicand_big();
        let delta = BigInt::from(self.field.delta);
        let u = &self.u * &other.u + d * &self.v * &other.v;
        let v = &self.u * &other.v + &self.v * &other.u;
        debug_assert!((&u % &delta).is_zero() && (&v % &delta).is_zero());
        Ok(Self { u: u / &delta, v: v / delta, field: self.field })
    }

    pub fn neg(&self) -> Self {
        Self { u: -&self.u, v: -&self.v, field: self.field }
    }

    /// Parses the format produced by `Display`, e.g. `(22-4√5)/2` or `9+√10`.
    pub fn parse(field: QuadraticField, s: &str) -> Result<Self> {
        let lit = ElementLiteral::parse(s)?;
        if let Some(r) = lit.radicand {
            if r != field.radicand {
                return Err(Error::Parse(format!("radicand {r} does not match {field}")));
            }
        }
        if lit.denominator != field.delta {
            return Err(Error::Parse(format!(
                "denominator {} does not match δ = {} of {field}",
                lit.denominator, field.delta
            )));
        }
        Self::new(field, lit.u, lit.v).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn write_numerator(f: &mut fmt::Formatter<'_>, u: &BigInt, v: &BigInt, d: i64) -> fmt::Result {
    let surd = |f: &mut fmt::Formatter<'_>, coeff: &BigInt| -> fmt::Result {
        if !coeff.is_one() {
            write!(f, "{coeff}")?;
        }
        write!(f, "√{d}")
    };
    if v.is_zero() {
        return write!(f, "{u}");
    }
    if u.is_zero() {
        if v == &-BigInt::one() {
            return write!(f, "-√{d}");
        }
        return surd(f, v);
    }
    write!(f, "{u}")?;
    if v.is_negative() {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    surd(f, &v.abs())
}

impl fmt::Display for QuadraticInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.delta == 1 {
            write_numerator(f, &self.u, &self.v, self.field.radicand)
        } else {
            write!(f, "(")?;
            write_numerator(f, &self.u, &self.v, self.field.radicand)?;
            write!(f, ")/{}", self.field.delta)
        }
    }
}

/// A syntactically valid element string, before it is checked against a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementLiteral {
    pub u: BigInt,
    pub v: BigInt,
    /// Present whenever a `√` term was written.
    pub radicand: Option<i64>,
    pub denominator: u8,
}

struct Cursor<'a> {
    src: &'a str,
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn eat(&mut self, token: &str) -> bool {
        if let Some(r) = self.rest.strip_prefix(token) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in element {:?}", self.src))
    }

    /// A run of digits without redundant leading zeros.
    fn digits(&mut self) -> Result<Option<&'a str>> {
        let end = self.rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest.len());
        if end == 0 {
            return Ok(None);
        }
        let (head, tail) = self.rest.split_at(end);
        if head.len() > 1 && head.starts_with('0') {
            return Err(self.err("leading zero"));
        }
        self.rest = tail;
        Ok(Some(head))
    }

    fn integer(&mut self, digits: &str) -> Result<BigInt> {
        digits.parse().map_err(|_| self.err("bad integer"))
    }

    /// `√R` with an optional minus sign on `R`.
    fn radicand(&mut self) -> Result<i64> {
        if !self.eat("√") {
            return Err(self.err("expected '√'"));
        }
        let negative = self.eat("-");
        let digits = self.digits()?.ok_or_else(|| self.err("missing radicand"))?;
        let r: i64 = digits.parse().map_err(|_| self.err("radicand out of range"))?;
        if r == 0 || (negative && digits == "0") {
            return Err(self.err("zero radicand"));
        }
        Ok(if negative { -r } else { r })
    }

    /// Coefficient in front of `√`: absent means 1, and an explicit 0 or 1 is not canonical.
    fn surd_coefficient(&mut self) -> Result<BigInt> {
        match self.digits()? {
            None => Ok(BigInt::one()),
            Some("0") | Some("1") => Err(self.err("non-canonical √ coefficient")),
            Some(d) => self.integer(d),
        }
    }
}

impl ElementLiteral {
    /// Accepts exactly the canonical rendering used by `Display`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut cur = Cursor { src: s, rest: s };
        let parenthesized = cur.eat("(");
        let negative = cur.eat("-");
        let sign = |x: BigInt, neg: bool| if neg { -x } else { x };
        let (u, v, radicand);
        if cur.rest.starts_with('√') || cur.rest.find('√').is_some_and(|i| cur.rest[..i].bytes().all(|b| b.is_ascii_digit())) {
            v = sign(cur.surd_coefficient()?, negative);
            radicand = Some(cur.radicand()?);
            u = BigInt::zero();
        } else {
            let digits = cur.digits()?.ok_or_else(|| cur.err("missing integer"))?;
            if negative && digits == "0" {
                return Err(cur.err("negative zero"));
            }
            u = sign(cur.integer(digits)?, negative);
            let surd_negative = if cur.eat("+") {
                Some(false)
            } else if cur.eat("-") {
                Some(true)
            } else {
                None
            };
            match surd_negative {
                Some(neg) => {
                    if u.is_zero() {
                        return Err(cur.err("non-canonical zero term"));
                    }
                    v = sign(cur.surd_coefficient()?, neg);
                    radicand = Some(cur.radicand()?);
                }
                None => {
                    v = BigInt::zero();
                    radicand = None;
                }
            }
        }
        let denominator = if parenthesized {
            if !cur.eat(")/2") {
                return Err(cur.err("expected ')/2'"));
            }
            2
        } else {
            1
        };
        if !cur.rest.is_empty() {
            return Err(cur.err("trailing input"));
        }
        Ok(Self { u, v, radicand, denominator })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: i64) -> QuadraticField {
        QuadraticField::new(d).unwrap()
    }

    #[test]
    fn field_construction() {
        assert_eq!(field(5).delta(), 2);
        assert_eq!(field(10).delta(), 1);
        assert_eq!(field(-23).delta(), 2);
        assert_eq!(field(-5).delta(), 1);
        assert_eq!(field(-5).discriminant(), BigInt::from(-20));
        assert_eq!(field(-163).discriminant(), BigInt::from(-163));
        assert!(QuadraticField::new(12).is_err());
        assert!(QuadraticField::new(1).is_err());
        assert!(QuadraticField::new(0).is_err());
        assert!(QuadraticField::new(-4).is_err());
    }

    #[test]
    fn norms() {
        let k = field(5);
        assert_eq!(k.element(22, -4).unwrap().norm(), BigInt::from(101));
        assert_eq!(field(10).element(9, 1).unwrap().norm(), BigInt::from(71));
        assert_eq!(k.zero().norm(), BigInt::zero());
        assert!(k.element(1, 2).is_err());
    }

    #[test]
    fn ring_operations() {
        let k = field(5);
        let phi = k.element(1, 1).unwrap();
        assert_eq!(phi.mul(&phi.conj()).unwrap(), k.integer(-1));
        let x = field(10).element(9, 1).unwrap();
        assert_eq!(x.conj(), field(10).element(9, -1).unwrap());
        let n = x.mul(&x.conj()).unwrap();
        assert_eq!(n, field(10).integer(x.norm()));
        assert!(x.mul(&phi).is_err());
        assert_eq!(phi.add(&phi.conj()).unwrap(), k.integer(1));
        assert_eq!(phi.sub(&phi).unwrap(), k.zero());
        assert_eq!(phi.trace(), BigInt::from(1));
    }

    #[test]
    fn rendering() {
        let k = field(5);
        assert_eq!(k.element(22, -4).unwrap().to_string(), "(22-4√5)/2");
        assert_eq!(k.element(1, 1).unwrap().to_string(), "(1+√5)/2");
        assert_eq!(k.integer(3).to_string(), "(6)/2");
        let r = field(10);
        assert_eq!(r.element(9, 1).unwrap().to_string(), "9+√10");
        assert_eq!(r.element(9, -1).unwrap().to_string(), "9-√10");
        assert_eq!(r.element(0, -1).unwrap().to_string(), "-√10");
        assert_eq!(r.element(0, 3).unwrap().to_string(), "3√10");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(field(-5).element(18, 1).unwrap().to_string(), "18+√-5");
    }

    #[test]
    fn parsing() {
        let k = field(5);
        assert_eq!(QuadraticInteger::parse(k, "(22-4√5)/2").unwrap(), k.element(22, -4).unwrap());
        assert_eq!(QuadraticInteger::parse(field(10), "9+√10").unwrap(), field(10).element(9, 1).unwrap());
        assert_eq!(QuadraticInteger::parse(field(-23), "(1-√-23)/2").unwrap(), field(-23).element(1, -1).unwrap());
        assert_eq!(QuadraticInteger::parse(field(10), "-√10").unwrap(), field(10).element(0, -1).unwrap());
        assert_eq!(QuadraticInteger::parse(field(10), "0").unwrap(), field(10).zero());
        for bad in ["", "(", "22-4√5", "(22-4√5)/3", "9+√11", "(1+2√5)/2", "1√10", "+9", "9+", "√", "9 + √10", "(9)/1", "0+√10", "9+0√10"] {
            let target = if bad.contains("√5") { k } else { field(10) };
            assert!(QuadraticInteger::parse(target, bad).is_err(), "{bad:?} parsed");
        }
    }
}
