// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in the Eisenstein integers `Z[w]`, `w = (-1 + sqrt(-3))/2`.
//!
//! Elements are stored as `a + b*w` with arbitrary-precision coordinates.
//! Multiplication uses `w^2 = -1 - w`. Division with remainder rounds the
//! exact quotient coordinate-wise to the nearest integer (ties upward), which
//! bounds the remainder norm by `3/4` of the divisor norm.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// `x = (-1)^negated * w^i * (1-w)^j * primary`, with `primary = 2 (mod 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub negated: bool,
    pub i: u8,
    pub j: u32,
    pub primary: EisensteinInt,
}

impl PrimaryDecomposition {
    pub fn reassemble(&self) -> EisensteinInt {
        let mut x = self.primary.clone();
        for _ in 0..self.j {
            x = &x * &EisensteinInt::one_minus_omega();
        }
        for _ in 0..self.i {
            x = x.times_omega();
        }
        if self.negated {
            -x
        } else {
            x
        }
    }
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Self::new(a, 0)
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    pub fn omega_sq() -> Self {
        Self::new(-1, -1)
    }

    pub fn one_minus_omega() -> Self {
        Self::new(1, -1)
    }

    /// `1 + 2w`, a square root of `-3`.
    pub fn sqrt_minus_three() -> Self {
        Self::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Image under `w -> w^2`.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    pub fn times_omega(&self) -> Self {
        // (a + bw)w = -b + (a - b)w
        Self {
            a: -&self.b,
            b: &self.a - &self.b,
        }
    }

    /// `3 | a - 2` and `3 | b`.
    pub fn is_primary(&self) -> bool {
        let three = BigInt::from(3);
        (&self.a - 2i32).is_multiple_of(&three) && self.b.is_multiple_of(&three)
    }

    /// Congruent to `2` or `-2` modulo 3.
    pub fn is_plus_minus_two_mod_3(&self) -> bool {
        self.is_primary() || (-self).is_primary()
    }

    pub fn divisible_by_one_minus_omega(&self) -> bool {
        (&self.a + &self.b).is_multiple_of(&BigInt::from(3))
    }

    pub fn divrem(&self, den: &Self) -> Result<(Self, Self)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = den.norm();
        let t = self * &den.conj();
        let two_n = &n << 1;
        let round = |x: &BigInt| ((x << 1u32) + &n).div_floor(&two_n);
        let q = Self {
            a: round(&t.a),
            b: round(&t.b),
        };
        let r = self - &(&q * den);
        debug_assert!(r.norm() < n);
        Ok((q, r))
    }

    pub fn rem(&self, den: &Self) -> Result<Self> {
        self.divrem(den).map(|(_, r)| r)
    }

    /// Exact division; `None` when `den` does not divide `self`.
    pub fn div_exact(&self, den: &Self) -> Option<Self> {
        match self.divrem(den) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Greatest common divisor by the Euclidean algorithm.
    ///
    /// Normalized to `(1-w)^j * primary` where `j` is the power of `1-w` in
    /// the result; for gcds coprime to `1-w` this is the primary associate.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        let dec = x.primary_decompose()?;
        let mut g = dec.primary;
        for _ in 0..dec.j {
            g = &g * &Self::one_minus_omega();
        }
        Ok(g)
    }

    /// Splits off the unit and the power of `1-w`, leaving a primary part.
    pub fn primary_decompose(&self) -> Result<PrimaryDecomposition> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let three = BigInt::from(3);
        let mut x = self.clone();
        let mut j = 0u32;
        // x / (1-w) = x(2+w)/3 = ((2a - b) + (a + b)w)/3
        while x.divisible_by_one_minus_omega() {
            let a = (&x.a * 2 - &x.b) / &three;
            let b = (&x.a + &x.b) / &three;
            x = Self { a, b };
            j += 1;
        }
        // Try x = w^i * u with u = +-primary, i.e. u = w^(3-i) x.
        let mut u = x;
        for k in 0..3u8 {
            if u.is_primary() {
                return Ok(PrimaryDecomposition {
                    negated: false,
                    i: (3 - k) % 3,
                    j,
                    primary: u,
                });
            }
            let neg = -&u;
            if neg.is_primary() {
                return Ok(PrimaryDecomposition {
                    negated: true,
                    i: (3 - k) % 3,
                    j,
                    primary: neg,
                });
            }
            u = u.times_omega();
        }
        unreachable!("every element prime to 1-w has a primary associate")
    }

    /// The primary associate of an element congruent to `+-2` mod 3.
    pub fn primary_associate(&self) -> Option<Self> {
        if self.is_primary() {
            Some(self.clone())
        } else if (-self).is_primary() {
            Some(-self)
        } else {
            None
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = if self.b.abs().is_one() {
            String::new()
        } else {
            self.b.abs().to_string()
        };
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}w")
        } else {
            write!(f, "{}{sign}{coeff}w", self.a)
        }
    }
}

impl<'a> Add<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}
