// SPDX-License-Identifier: Apache-2.0

//! Word-sized modular arithmetic: Legendre/Jacobi symbols, Tonelli–Shanks,
//! Miller–Rabin and a small residue-field context used by the recurrence
//! and criterion code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
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

/// Reduces a signed value into `[0, m)`.
#[inline]
pub fn residue_i128(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

pub fn residue_big(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue below modulus fits in u64")
}

/// Deterministic Miller–Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
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

/// Primes in the closed interval `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= hi_us {
        if sieve[i] {
            let mut j = i * i;
            while j <= hi_us {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&n| sieve[n as usize]).collect()
}

/// Jacobi symbol (a/n) for odd positive n, by the binary algorithm with
/// quadratic reciprocity.
pub fn jacobi(a: i128, n: u64) -> i8 {
    assert!(n % 2 == 1, "jacobi symbol needs an odd modulus");
    let mut a = residue_i128(a, n);
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol of an arbitrary-precision integer modulo an odd prime.
pub fn legendre_big(a: &BigInt, p: u64) -> i8 {
    jacobi(residue_big(a, p) as i128, p)
}

/// Square root of `n` modulo the odd prime `p` (Tonelli–Shanks).
///
/// Returns the smaller of the two roots; `0` when `p | n`.
pub fn sqrt_mod_p(n: i128, p: u64) -> Result<u64> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::NotPrime(p));
    }
    let n = residue_i128(n, p);
    if n == 0 {
        return Ok(0);
    }
    if jacobi(n as i128, p) != 1 {
        return Err(Error::NonResidue { n, p });
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let root = if s == 1 {
        pow_mod(n, (p + 1) / 4, p)
    } else {
        let mut z = 2u64;
        while jacobi(z as i128, p) != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(n, q, p);
        let mut r = pow_mod(n, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    debug_assert_eq!(mul_mod(root, root, p), n);
    Ok(root.min(p - root))
}

/// Extended gcd on signed integers: returns `(g, x, y)` with
/// `a*x + b*y = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Arithmetic in the prime field of `p` elements, `p` odd and below 2^63.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> u64 {
        residue_i128(x as i128, self.p)
    }

    #[inline]
    pub fn from_big(&self, x: &BigInt) -> u64 {
        residue_big(x, self.p)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod_p(5, 31).unwrap(), 6);
        assert_eq!(sqrt_mod_p(9, 13).unwrap(), 3);
        assert!(matches!(sqrt_mod_p(3, 7), Err(Error::NonResidue { .. })));
        assert_eq!(sqrt_mod_p(62, 31).unwrap(), 0);
    }

    #[test]
    fn sqrt_matches_brute_force() {
        for p in primes_between(3, 400) {
            for n in 0..p {
                let brute = (0..p).find(|&r| r * r % p == n);
                match (sqrt_mod_p(n as i128, p), brute) {
                    (Ok(r), Some(b)) => {
                        assert_eq!(r * r % p, n);
                        assert_eq!(r, b.min(p - b));
                    }
                    (Err(_), None) => {}
                    (got, want) => panic!("p={p} n={n}: {got:?} vs {want:?}"),
                }
            }
        }
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in primes_between(3, 300) {
            for a in -20i128..60 {
                let e = pow_mod(residue_i128(a, p), (p - 1) / 2, p);
                let want = match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(jacobi(a, p), want, "a={a} p={p}");
            }
        }
        assert_eq!(legendre_big(&BigInt::from(-104), 11), -1);
        assert_eq!(legendre_big(&BigInt::from(-104), 5), 1);
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let sieved = primes_between(0, 10_000);
        let tested: Vec<u64> = (0..=10_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, tested);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn ext_gcd_bezout() {
        for (a, b) in [(240, 46), (-7, 3), (0, 5), (12, -18), (0, 0)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(a * x + b * y, g);
            assert!(g >= 0);
        }
    }
}
