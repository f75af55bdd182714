// SPDX-License-Identifier: Apache-2.0

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Miller-Rabin with the first thirteen prime bases is exact below this bound.
pub const DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let odd = (n - 1) >> s;
    'witness: for &a in &BASES[..12] {
        let mut x = pow_mod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> s;
    'witness: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&odd, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality test. Negative numbers, 0 and 1 are not prime.
///
/// Below [`DETERMINISTIC_LIMIT`] this is Miller-Rabin with a proven witness
/// set; above it falls back to trial division, which is exact but slow.
pub fn is_prime(m: &BigInt) -> bool {
    if m.is_negative() {
        return false;
    }
    if let Some(n) = m.to_u64() {
        return is_prime_u64(n);
    }
    let n = m.magnitude();
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if m.to_u128().is_some_and(|v| v < DETERMINISTIC_LIMIT) {
        return miller_rabin_big(n);
    }
    let mut p = BigUint::from(43u32);
    while &p * &p <= *n {
        if (n % &p).is_zero() {
            return false;
        }
        p += 2u32;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_values_match_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn spot_values() {
        assert!(is_prime(&BigInt::from(907)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(is_prime(&BigInt::from(2707)));
        assert!(!is_prime(&BigInt::from(-7)));
        // strong pseudoprime to bases 2..=37 but not 41
        let psp: BigInt = "3825123056546413051".parse().unwrap();
        assert!(!is_prime(&psp));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(u64::MAX));
    }

    #[test]
    fn beyond_64_bits() {
        let p65 = (BigInt::one() << 64) + 13;
        assert!(is_prime(&p65));
        // 2^67 - 1 = 193707721 * 761838257287
        let m67 = (BigInt::one() << 67) - 1;
        assert!(!is_prime(&m67));
        let p = BigInt::from(1_000_000_000_039u64);
        assert!(is_prime(&p));
        assert!(!is_prime(&(&p * &p)));
        // above the Miller-Rabin bound, resolved by trial division
        let big = ((BigInt::one() << 89) - 1) * 43;
        assert!(!is_prime(&big));
    }
}
