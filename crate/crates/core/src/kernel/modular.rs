// SPDX-License-Identifier: Apache-2.0

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primality::{is_prime, is_prime_u64};
use crate::error::{domain, Result};

/// Jacobi symbol `(a/n)` for odd `n > 0`, by the reciprocity ladder.
pub fn jacobi_u64(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = (a as i128).rem_euclid(n as i128) as u64;
    let mut n = n;
    let mut acc = 1i8;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            acc = -acc;
        }
        if a % 4 == 3 && n % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        acc
    } else {
        0
    }
}

/// Jacobi symbol `(a/n)` for odd `n > 0`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8> {
    if !n.is_positive() || n.is_even() {
        return Err(domain(format!("Jacobi symbol needs an odd positive modulus, got {n}")));
    }
    let mut n = n.magnitude().clone();
    let mut a = a.mod_floor(&BigInt::from(n.clone())).magnitude().clone();
    let mut acc = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        let n8 = (&n % 8u32).to_u32().unwrap_or(0);
        if twos % 2 == 1 && (n8 == 3 || n8 == 5) {
            acc = -acc;
        }
        if (&a % 4u32) == BigUint::from(3u32) && n8 % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    Ok(if n.is_one() { acc } else { 0 })
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: &BigInt) -> Result<i8> {
    if !is_prime(p) || p == &BigInt::from(2) {
        return Err(domain(format!("Legendre symbol needs an odd prime, got {p}")));
    }
    jacobi(a, p)
}

pub fn legendre_u64(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime_u64(p) {
        return Err(domain(format!("Legendre symbol needs an odd prime, got {p}")));
    }
    Ok(jacobi_u64(a, p))
}

/// Square root of `a` modulo the odd prime `q`.
///
/// Returns the smaller of the two roots, so `0 < n ≤ q - n`, or `None` when
/// `a` is a non-residue. `q | a` is rejected.
pub fn sqrt_mod(a: &BigInt, q: &BigInt) -> Result<Option<BigInt>> {
    if !is_prime(q) || q == &BigInt::from(2) {
        return Err(domain(format!("square roots need an odd prime modulus, got {q}")));
    }
    let a = a.mod_floor(q);
    if a.is_zero() {
        return Err(domain(format!("{q} divides the radicand")));
    }
    if jacobi(&a, q)? != 1 {
        return Ok(None);
    }
    let p = q.magnitude();
    let a = a.magnitude();
    let one = BigUint::one();
    let root = if (p % 4u32) == BigUint::from(3u32) {
        a.modpow(&((p + &one) >> 2), p)
    } else {
        tonelli_shanks(a, p)
    };
    let other = p - &root;
    let n = root.min(other);
    debug_assert_eq!((&n * &n) % p, a % p);
    Ok(Some(BigInt::from(n)))
}

fn tonelli_shanks(a: &BigUint, p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let p_minus_one = p - &one;
    let s = p_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &p_minus_one >> s;
    let half = &p_minus_one >> 1;
    let mut z = BigUint::from(2u32);
    while z.modpow(&half, p) != p_minus_one {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&odd, p);
    let mut t = a.modpow(&odd, p);
    let mut r = a.modpow(&((&odd + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b) % p;
        }
        m = i;
        c = (&b * &b) % p;
        t = (t * &c) % p;
        r = (r * b) % p;
    }
    r
}

pub fn sqrt_mod_u64(a: i64, q: u64) -> Result<Option<u64>> {
    Ok(sqrt_mod(&BigInt::from(a), &BigInt::from(q))?.map(|n| n.to_u64().expect("root below modulus")))
}

/// The inverse of `a` modulo `m ≥ 2`, in `[0, m)`.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    if m < &BigInt::from(2) {
        return Err(domain(format!("modulus must be at least 2, got {m}")));
    }
    let eg = a.mod_floor(m).extended_gcd(m);
    if !eg.gcd.is_one() {
        return Err(domain(format!("{a} is not invertible modulo {m}")));
    }
    Ok(eg.x.mod_floor(m))
}

/// The unique `x ∈ [0, 2q)` with `x ≡ r_q (mod q)` and `x ≡ r_2 (mod 2)`, for odd `q`.
pub fn crt_q2(r_q: &BigInt, q: &BigInt, r_2: u8) -> BigInt {
    assert!(q.is_odd() && q.is_positive(), "crt_q2 needs an odd positive modulus");
    let x = r_q.mod_floor(q);
    if (x.is_odd() as u8) == (r_2 & 1) {
        x
    } else {
        x + q
    }
}
