// SPDX-License-Identifier: Apache-2.0

//! Exact integer primitives: primality, residue symbols, modular square
//! roots and inverses, and a few helpers on squares.

mod modular;
mod primality;
mod sieve;

pub use modular::{crt_q2, inv_mod, jacobi, jacobi_u64, legendre, legendre_u64, sqrt_mod, sqrt_mod_u64};
pub use primality::{is_prime, is_prime_u64, DETERMINISTIC_LIMIT};
pub use sieve::{primes_up_to, PrimeSieve};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

/// `⌊√m⌋` for `m ≥ 0`.
pub fn isqrt(m: &BigInt) -> BigInt {
    assert!(!m.is_negative(), "isqrt of a negative number");
    m.sqrt()
}

/// The exact square root of `m` if it is a perfect square.
pub fn exact_sqrt(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let r = m.sqrt();
    (&r * &r == *m).then_some(r)
}

pub fn exact_sqrt_u64(m: u64) -> Option<u64> {
    let r = m.sqrt();
    (r * r == m).then_some(r)
}

/// True iff no prime square divides `m`. Zero is not squarefree.
///
/// Divides out every prime up to `|m|^(1/3)`; whatever is left has at most two
/// prime factors, so it is squarefree unless it is a perfect square.
pub fn is_squarefree(m: i64) -> bool {
    if m == 0 {
        return false;
    }
    let mut rest = m.unsigned_abs();
    let cube_root = rest.cbrt() + 1;
    let mut p = 2u64;
    while p <= cube_root && p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    rest == 1 || exact_sqrt_u64(rest).is_none()
}

/// Largest odd prime factor of `m`, by trial division.
pub fn largest_odd_prime_factor(mut m: u64) -> Option<u64> {
    while m > 0 && m.is_multiple_of(2) {
        m /= 2;
    }
    let mut largest = None;
    let mut p = 3u64;
    while p * p <= m {
        while m.is_multiple_of(p) {
            largest = Some(p);
            m /= p;
        }
        p += 2;
    }
    if m > 1 {
        largest = Some(m);
    }
    largest
}

/// Smallest prime factor of `m ≥ 2`.
pub fn smallest_prime_factor(m: &BigInt) -> Option<BigInt> {
    if m < &BigInt::from(2) {
        return None;
    }
    let two = BigInt::from(2);
    if (m % &two).is_zero() {
        return Some(two);
    }
    let mut p = BigInt::from(3);
    while &p * &p <= *m {
        if (m % &p).is_zero() {
            return Some(p);
        }
        p += 2;
    }
    Some(m.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_floor() {
        assert_eq!(isqrt(&BigInt::from(163)), BigInt::from(12));
        assert_eq!(isqrt(&BigInt::from(144)), BigInt::from(12));
        assert_eq!(isqrt(&BigInt::from(0)), BigInt::from(0));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(-23));
        assert!(!is_squarefree(12));
        assert!(is_squarefree(-1));
        assert!(!is_squarefree(0));
        assert!(!is_squarefree(-27));
        assert!(!is_squarefree(49 * 3));
        assert!(!is_squarefree(1_000_003 * 1_000_003));
        assert!(is_squarefree(1_000_003 * 999_983));
        for m in 1..2000i64 {
            let naive = (2..=m).take_while(|p| p * p <= m).all(|p| m % (p * p) != 0);
            assert_eq!(is_squarefree(m), naive, "m = {m}");
            assert_eq!(is_squarefree(-m), naive, "m = -{m}");
        }
    }

    #[test]
    fn odd_prime_factors() {
        assert_eq!(largest_odd_prime_factor(10), Some(5));
        assert_eq!(largest_odd_prime_factor(64), None);
        assert_eq!(largest_odd_prime_factor(2 * 3 * 3 * 7), Some(7));
        assert_eq!(smallest_prime_factor(&BigInt::from(247)), Some(BigInt::from(13)));
        assert_eq!(smallest_prime_factor(&BigInt::from(1)), None);
    }
}
