// SPDX-License-Identifier: Apache-2.0

//! The cubic Jacobi symbol `(alpha/beta)_3` over `Z[w]`.
//!
//! [`cubic_jacobi`] never factors the denominator. It alternates
//! reduction modulo the denominator, extraction of the unit and `1-w`
//! parts through the supplementary laws
//!
//! ```text
//! (w/beta)   = w^((a+b+1)/3)
//! (1-w/beta) = w^(2(a+1)/3)        beta = a + bw primary
//! ```
//!
//! and Eisenstein reciprocity `(pi/beta) = (beta/pi)` for primary `pi`,
//! `beta`. [`residue_character_oracle`] evaluates the defining power
//! `alpha^((N(pi)-1)/3) mod pi` directly and serves as the reference.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::eisenstein::EisensteinInt;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolValue {
    Zero,
    One,
    Omega,
    OmegaSq,
}

impl SymbolValue {
    /// `w^k`, exponent taken mod 3.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => SymbolValue::One,
            1 => SymbolValue::Omega,
            _ => SymbolValue::OmegaSq,
        }
    }

    /// Exponent of `w` for nonzero values.
    pub fn exponent(self) -> Option<u8> {
        match self {
            SymbolValue::Zero => None,
            SymbolValue::One => Some(0),
            SymbolValue::Omega => Some(1),
            SymbolValue::OmegaSq => Some(2),
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            SymbolValue::Omega => SymbolValue::OmegaSq,
            SymbolValue::OmegaSq => SymbolValue::Omega,
            v => v,
        }
    }

    pub fn to_eisenstein(self) -> EisensteinInt {
        match self {
            SymbolValue::Zero => EisensteinInt::zero(),
            SymbolValue::One => EisensteinInt::one(),
            SymbolValue::Omega => EisensteinInt::omega(),
            SymbolValue::OmegaSq => EisensteinInt::omega_sq(),
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;
    fn mul(self, rhs: Self) -> Self {
        match (self.exponent(), rhs.exponent()) {
            (Some(x), Some(y)) => SymbolValue::omega_pow((x + y) as i64),
            _ => SymbolValue::Zero,
        }
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolValue::Zero => "0",
            SymbolValue::One => "1",
            SymbolValue::Omega => "w",
            SymbolValue::OmegaSq => "w^2",
        })
    }
}

fn exact_third(x: BigInt) -> i64 {
    let (q, r) = x.div_rem(&BigInt::from(3));
    assert!(r.is_zero(), "primary denominator must make this exponent integral");
    q.mod_floor(&BigInt::from(3)).to_i64().unwrap()
}

/// Exponent of `(w/beta)_3` for primary `beta = a + bw`.
fn omega_exponent(beta: &EisensteinInt) -> i64 {
    exact_third(&beta.a + &beta.b + 1)
}

/// Exponent of `((1-w)/beta)_3` for primary `beta = a + bw`.
fn one_minus_omega_exponent(beta: &EisensteinInt) -> i64 {
    exact_third((&beta.a + 1) * 2)
}

/// Cubic Jacobi symbol `(alpha/beta)_3`.
///
/// `beta` must be congruent to `2` or `-2` mod 3 (every rational integer
/// prime to 3 qualifies). The symbol for `beta = +-1` is `One`.
pub fn cubic_jacobi(alpha: &EisensteinInt, beta: &EisensteinInt) -> Result<SymbolValue> {
    if beta.is_zero() {
        return Err(Error::ZeroInput);
    }
    if beta.divisible_by_one_minus_omega() {
        return Err(Error::SymbolUndefined);
    }
    let mut den = beta
        .primary_associate()
        .ok_or_else(|| Error::NonPrimaryDenominator(beta.to_string()))?;
    let mut num = alpha.clone();
    let mut exp = 0i64;
    loop {
        if den.is_unit() {
            return Ok(SymbolValue::omega_pow(exp));
        }
        let r = num.rem(&den)?;
        if r.is_zero() {
            return Ok(SymbolValue::Zero);
        }
        let dec = r.primary_decompose()?;
        // (-1/den) = 1 since -1 is a cube
        exp += dec.i as i64 * omega_exponent(&den);
        exp += dec.j as i64 * one_minus_omega_exponent(&den);
        if dec.primary.is_unit() {
            return Ok(SymbolValue::omega_pow(exp));
        }
        // (pi/den) = (den/pi), both primary
        num = den;
        den = dec.primary;
    }
}

/// `alpha^((N(pi)-1)/3) mod pi`, matched against `{0, 1, w, w^2}`.
///
/// `pi` must generate a prime ideal prime to 3: either `N(pi)` is a rational
/// prime `= 1 mod 3`, or `pi` is (up to sign) a rational prime `= 2 mod 3`.
pub fn residue_character_oracle(alpha: &EisensteinInt, pi: &EisensteinInt) -> Result<SymbolValue> {
    let norm = pi.norm();
    let admissible = match norm.to_u64() {
        Some(n) if pi.is_rational() => {
            let q = pi.a.abs().to_u64().unwrap_or(0);
            q % 3 == 2 && is_prime(q) && n == q * q
        }
        Some(n) => n % 3 == 1 && is_prime(n),
        None => false,
    };
    if !admissible {
        return Err(Error::InadmissibleModulus(pi.to_string()));
    }
    let exp = ((&norm - 1u32) / 3u32)
        .to_u64()
        .ok_or_else(|| Error::InadmissibleModulus(pi.to_string()))?;

    let base = alpha.rem(pi)?;
    if base.is_zero() {
        return Ok(SymbolValue::Zero);
    }
    let mut acc = EisensteinInt::one();
    let mut sq = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &sq).rem(pi)?;
        }
        sq = (&sq * &sq).rem(pi)?;
        e >>= 1;
    }
    for v in [SymbolValue::One, SymbolValue::Omega, SymbolValue::OmegaSq] {
        if (&acc - &v.to_eisenstein()).rem(pi)?.is_zero() {
            return Ok(v);
        }
    }
    unreachable!("power is a cube root of unity modulo a prime")
}

/// `(alpha/n)_3` for a rational integer `n` prime to 3.
pub fn cubic_jacobi_rational(alpha: &EisensteinInt, n: &BigInt) -> Result<SymbolValue> {
    if n.is_one() || (-n).is_one() {
        return Ok(SymbolValue::One);
    }
    cubic_jacobi(alpha, &EisensteinInt::from_int(n.clone()))
}
