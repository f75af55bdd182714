// SPDX-License-Identifier: Apache-2.0

//! Split prime ideals `(q, n + √D)` and their principality.
//!
//! With `n² − D = l·q`, the ideal is principal exactly when the form
//! `l x² + 2n xy + q y²` represents `δ²` (imaginary fields) or `±δ²` (real
//! fields). A representation `(k, v)` yields the generator
//!
//! ```text
//! γ = q(a + b√D)/δ + (n + √D)(c + d√D)/δ
//! ```
//!
//! where `c` is free, `n·d ≡ k − c (mod q)` (and `d ≡ c (mod 2)` when
//! `δ = 2`), `b = (k − c − n·d)/q` and `a = n·b + v + d·l`. Every generator
//! is checked to have norm `±q` and to lie in the ideal before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::field::{QuadraticField, QuadraticInteger};
use crate::forms::{represents_definite, represents_indefinite, BinaryForm, Representation};
use crate::kernel::{crt_q2, inv_mod, is_prime, sqrt_mod, DETERMINISTIC_LIMIT};

/// How an odd prime `q` factors in `Q(√D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingType {
    /// `q = (q, n + √D)(q, n − √D)` with the smaller root `n`.
    Split(BigInt),
    Inert,
    Ramified,
}

fn check_odd_prime(q: &BigInt) -> Result<()> {
    if q == &BigInt::from(2) {
        return Err(Error::EvenPrime);
    }
    if q.to_u128().is_none_or(|v| v >= DETERMINISTIC_LIMIT) && q.is_positive() {
        return Err(domain(format!("{q} is beyond the supported prime range")));
    }
    if !is_prime(q) {
        return Err(domain(format!("{q} is not an odd prime")));
    }
    Ok(())
}

pub fn split_type(field: QuadraticField, q: &BigInt) -> Result<SplittingType> {
    check_odd_prime(q)?;
    let d = field.radicand_big();
    if d.mod_floor(q).is_zero() {
        return Ok(SplittingType::Ramified);
    }
    Ok(match sqrt_mod(&d, q)? {
        Some(n) => SplittingType::Split(n),
        None => SplittingType::Inert,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPrimeIdeal {
    field: QuadraticField,
    q: BigInt,
    n: BigInt,
    l: BigInt,
}

impl SplitPrimeIdeal {
    /// `(q, n + √D)` for any `0 < n < q` with `n² ≡ D (mod q)`.
    pub fn new(field: QuadraticField, q: BigInt, n: BigInt) -> Result<Self> {
        check_odd_prime(&q)?;
        let d = field.radicand_big();
        if d.mod_floor(&q).is_zero() {
            return Err(Error::Ramified { q: q.to_string(), d: field.radicand() });
        }
        if !n.is_positive() || n >= q {
            return Err(domain(format!("n = {n} must lie in (0, {q})")));
        }
        let (l, r) = (&n * &n - d).div_rem(&q);
        if !r.is_zero() {
            return Err(domain(format!("{n}² is not congruent to {} modulo {q}", field.radicand())));
        }
        Ok(Self { field, q, n, l })
    }

    /// The ideal over `q` with the smaller square root `n ≤ q/2`.
    pub fn canonical(field: QuadraticField, q: &BigInt) -> Result<Self> {
        match split_type(field, q)? {
            SplittingType::Split(n) => Self::new(field, q.clone(), n),
            SplittingType::Inert => Err(Error::Inert { q: q.to_string(), d: field.radicand() }),
            SplittingType::Ramified => Err(Error::Ramified { q: q.to_string(), d: field.radicand() }),
        }
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// The cofactor `l = (n² − D)/q`.
    pub fn l(&self) -> &BigInt {
        &self.l
    }

    /// `(q, (q − n) + √D)`, the other prime over `q`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.field, self.q.clone(), &self.q - &self.n).expect("conjugate of a split prime")
    }

    /// `l x² + 2n xy + q y²`, whose determinant is `D`.
    pub fn associated_form(&self) -> BinaryForm {
        BinaryForm::new(self.l.clone(), self.n.clone(), self.q.clone())
    }

    /// Membership of `(u + v√D)/δ`: holds iff `u ≡ n·v (mod q)`.
    pub fn contains(&self, x: &QuadraticInteger) -> bool {
        x.field() == self.field && (x.u() - &self.n * x.v()).mod_floor(&self.q).is_zero()
    }

    /// `|N(g)| = q` together with `g ∈ P` means `(g) = P`.
    pub fn verify_generator(&self, g: &QuadraticInteger) -> bool {
        g.field() == self.field && g.norm().abs() == self.q && self.contains(g)
    }

    fn targets(&self) -> Vec<(BigInt, i8)> {
        let delta_sq = self.field.delta_big() * self.field.delta_big();
        if self.field.is_imaginary() {
            vec![(delta_sq, 1)]
        } else {
            vec![(delta_sq.clone(), 1), (-delta_sq, -1)]
        }
    }

    pub fn is_principal(&self) -> Result<PrincipalityResult> {
        let f = self.associated_form();
        for (target, sign) in self.targets() {
            let found = if self.field.is_imaginary() {
                represents_definite(&f, &target)?
            } else {
                represents_indefinite(&f, &target)?
            };
            if let Some(rep) = found {
                let generator = self.construct_generator(&rep, sign)?;
                if !self.verify_generator(&generator.element) {
                    return Err(Error::Invariant(format!("{} does not generate {self}", generator.element)));
                }
                return Ok(PrincipalityResult {
                    verdict: true,
                    representation: Some(rep),
                    sign: Some(sign),
                    generator: Some(generator),
                });
            }
        }
        Ok(PrincipalityResult { verdict: false, representation: None, sign: None, generator: None })
    }

    /// Builds a generator from `f(k, v) = sign·δ²`, trying `c = 0` and `c = 1`
    /// and keeping the one with smaller coordinates (ties go to `c = 0`).
    pub fn construct_generator(&self, rep: &Representation, sign: i8) -> Result<Generator> {
        let first = self.construct_generator_with(rep, sign, &BigInt::zero())?;
        let second = self.construct_generator_with(rep, sign, &BigInt::from(1))?;
        Ok(if second.height() < first.height() { second } else { first })
    }

    /// Builds the generator for a fixed choice of `c`, with `d` the least
    /// nonnegative solution modulo `q` (or `2q` when `δ = 2`).
    pub fn construct_generator_with(&self, rep: &Representation, sign: i8, c: &BigInt) -> Result<Generator> {
        let delta = self.field.delta_big();
        let target = &delta * &delta * sign;
        if sign.abs() != 1 || self.associated_form().evaluate(&rep.x, &rep.y) != target {
            return Err(domain(format!("f({}, {}) is not {target}", rep.x, rep.y)));
        }
        let (q, n, l) = (&self.q, &self.n, &self.l);
        let (k, v) = (&rep.x, &rep.y);
        let n_inv = inv_mod(n, q)?;
        let d_mod_q = (n_inv * (k - c)).mod_floor(q);
        let d = if self.field.delta() == 2 {
            crt_q2(&d_mod_q, q, c.is_odd() as u8)
        } else {
            d_mod_q
        };
        let (b, rem) = (k - c - n * &d).div_rem(q);
        if !rem.is_zero() {
            return Err(Error::Invariant(format!("q ∤ k − c − n·d for c = {c}, d = {d}")));
        }
        let a = n * &b + v + &d * l;
        if self.field.delta() == 2 && a.is_odd() != b.is_odd() {
            return Err(Error::Invariant(format!("a = {a} and b = {b} differ in parity")));
        }
        let radicand = self.field.radicand_big();
        let u = q * &a + n * c + &d * &radicand;
        let w = q * &b + c + n * &d;
        let element = QuadraticInteger::new(self.field, u, w).map_err(|e| Error::Invariant(e.to_string()))?;
        let norm = element.norm();
        if norm != q * sign || !self.contains(&element) {
            return Err(Error::Invariant(format!("{element} has norm {norm} and does not generate {self}")));
        }
        Ok(Generator { element, coords: Coordinates { a, b, c: c.clone(), d }, norm })
    }

    /// The intermediate quantities of the substitution `w = q²D·x + qD(nc + dD)`,
    /// `z = q²D·y + qD(c + nd)`, checked against `r = (kn + vq)qD`, `s = kqD`
    /// and against `q·w² − qD·z² = ±δ²q⁴D²`.
    pub fn derivation(&self, rep: &Representation, sign: i8, coords: &Coordinates) -> Result<Derivation> {
        let (q, n, d_rad) = (&self.q, &self.n, self.field.radicand_big());
        let qd = q * &d_rad;
        let w = q * &qd * &coords.a + &qd * (n * &coords.c + &coords.d * &d_rad);
        let z = q * &qd * &coords.b + &qd * (&coords.c + n * &coords.d);
        let r = (&rep.x * n + &rep.y * q) * &qd;
        let s = &rep.x * &qd;
        let delta = self.field.delta_big();
        let rhs = &delta * &delta * q * q * q * q * &d_rad * &d_rad * sign;
        if w != r || z != s || q * &w * &w - &qd * &z * &z != rhs {
            return Err(Error::Invariant("substitution identities fail".into()));
        }
        Ok(Derivation { w, z, r, s })
    }
}

impl std::fmt::Display for SplitPrimeIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}+√{})", self.q, self.n, self.field.radicand())
    }
}

/// Membership test, see [`SplitPrimeIdeal::contains`].
pub fn in_ideal(x: &QuadraticInteger, ideal: &SplitPrimeIdeal) -> bool {
    ideal.contains(x)
}

/// Coefficients with `γ = q(a + b√D)/δ + (n + √D)(c + d√D)/δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinates {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub element: QuadraticInteger,
    pub coords: Coordinates,
    /// `N(γ)`, equal to `±q`.
    pub norm: BigInt,
}

impl Generator {
    fn height(&self) -> BigInt {
        self.element.u().abs().max(self.element.v().abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalityResult {
    pub verdict: bool,
    pub representation: Option<Representation>,
    /// Sign of the represented value `±δ²`.
    pub sign: Option<i8>,
    pub generator: Option<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub w: BigInt,
    pub z: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ideal(d: i64, q: i64) -> SplitPrimeIdeal {
        SplitPrimeIdeal::canonical(QuadraticField::new(d).unwrap(), &big(q)).unwrap()
    }

    #[test]
    fn splitting() {
        let k = QuadraticField::new(5).unwrap();
        assert_eq!(split_type(k, &big(101)).unwrap(), SplittingType::Split(big(45)));
        assert_eq!(split_type(k, &big(3)).unwrap(), SplittingType::Inert);
        assert_eq!(split_type(k, &big(5)).unwrap(), SplittingType::Ramified);
        assert_eq!(split_type(k, &big(2)), Err(Error::EvenPrime));
        assert!(split_type(k, &big(9)).is_err());
        assert!(matches!(SplitPrimeIdeal::canonical(k, &big(3)), Err(Error::Inert { .. })));
        assert!(matches!(SplitPrimeIdeal::canonical(k, &big(5)), Err(Error::Ramified { .. })));
    }

    #[test]
    fn associated_forms() {
        assert_eq!(ideal(5, 101).associated_form(), BinaryForm::new(20, 45, 101));
        assert_eq!(ideal(-23, 3).associated_form(), BinaryForm::new(8, 1, 3));
        assert_eq!(ideal(10, 71).associated_form(), BinaryForm::new(1, 9, 71));
        assert_eq!(ideal(-5, 47).associated_form(), BinaryForm::new(7, 18, 47));
    }

    #[test]
    fn membership() {
        let p = ideal(5, 101);
        let k = p.field();
        assert!(p.contains(&k.element(22, -4).unwrap()));
        assert!(!p.contains(&k.integer(1)));
        assert!(p.contains(&k.integer(101)));
        assert!(p.contains(&k.element(90, 2).unwrap()));
        assert!(!p.conjugate().contains(&k.element(90, 2).unwrap()));
        assert!(!p.contains(&QuadraticField::new(10).unwrap().integer(101)));
    }

    #[test]
    fn real_principal_examples() {
        let p = ideal(5, 101);
        let res = p.is_principal().unwrap();
        assert!(res.verdict);
        assert_eq!(res.sign, Some(1));
        let g = res.generator.unwrap();
        assert_eq!(g.norm, big(101));
        assert!(p.verify_generator(&g.element));

        let rep = Representation { x: big(-4), y: big(2), value: big(4) };
        let recorded = p.construct_generator_with(&rep, 1, &big(0)).unwrap();
        assert_eq!(recorded.coords, Coordinates { a: big(-8), b: big(-74), c: big(0), d: big(166) });
        assert_eq!(recorded.element.to_string(), "(22-4√5)/2");

        let p = ideal(10, 71);
        let rep = Representation { x: big(1), y: big(0), value: big(1) };
        let g = p.construct_generator_with(&rep, 1, &big(1)).unwrap();
        assert_eq!(g.coords, Coordinates { a: big(0), b: big(0), c: big(1), d: big(0) });
        assert_eq!(g.element.to_string(), "9+√10");
        assert!(p.is_principal().unwrap().verdict);
    }

    #[test]
    fn imaginary_nonprincipal_examples() {
        assert!(!ideal(-5, 47).is_principal().unwrap().verdict);
        assert!(!ideal(-23, 3).is_principal().unwrap().verdict);
        let res = ideal(-5, 3).is_principal().unwrap();
        assert!(!res.verdict && res.generator.is_none() && res.representation.is_none());
    }

    #[test]
    fn norm_four_ideal_is_principal() {
        for p in [5i64, 7, 11, 13, 17, 41] {
            let field = QuadraticField::new(1 - 4 * p);
            let Ok(field) = field else { continue };
            let ideal = SplitPrimeIdeal::new(field, big(p), big(1)).unwrap();
            assert_eq!(ideal.l(), &big(4));
            let rep = Representation { x: big(1), y: big(0), value: big(4) };
            let g = ideal.construct_generator(&rep, 1).unwrap();
            assert_eq!(g.norm, big(p));
        }
    }

    #[test]
    fn generator_rejects_non_solutions() {
        let p = ideal(5, 101);
        let rep = Representation { x: big(1), y: big(0), value: big(4) };
        assert!(p.construct_generator(&rep, 1).is_err());
        assert!(!p.verify_generator(&p.field().integer(101)));
    }

    #[test]
    fn derivation_identities() {
        let p = ideal(5, 101);
        let res = p.is_principal().unwrap();
        let g = res.generator.unwrap();
        let d = p.derivation(res.representation.as_ref().unwrap(), 1, &g.coords).unwrap();
        assert_eq!(d.w, d.r);
        assert_eq!(d.s, big(-4 * 101 * 5));
    }

    #[test]
    fn rejects_invalid_ideals() {
        let k = QuadraticField::new(5).unwrap();
        assert!(SplitPrimeIdeal::new(k, big(101), big(44)).is_err());
        assert!(SplitPrimeIdeal::new(k, big(101), big(146)).is_err());
        assert_eq!(SplitPrimeIdeal::new(k, big(2), big(1)), Err(Error::EvenPrime));
        assert!(SplitPrimeIdeal::new(k, big(5), big(0)).is_err());
    }
}
