// SPDX-License-Identifier: Apache-2.0

//! The cubic character `chi([a,2b,c]) = ((P - 3b(1+2w))/a)_3` on `H(4D)`,
//! its kernel `G(P, D)` and the discriminant data of a cubic polynomial.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, residue_big};
use crate::eisenstein::EisensteinInt;
use crate::quadform::{ClassGroup, FormClass, QuadForm};
use crate::symbol::{cubic_jacobi_rational, SymbolValue};
use crate::{Error, Result};

/// Serializes arbitrary-precision integers as decimal strings.
pub mod big_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Writes `q = 2^k * r^3` with `k` in `{0, 1, 2}`; `None` when impossible.
pub fn two_cube_split(q: &BigInt) -> Option<(u8, BigInt)> {
    if q.is_zero() {
        return None;
    }
    let v = q.abs().trailing_zeros().unwrap_or(0);
    let k = (v % 3) as u8;
    let odd = q >> v;
    let r = odd.cbrt();
    if &r * &r * &r != odd {
        return None;
    }
    Some((k, r << ((v - k as u64) / 3)))
}

/// `3 | P` only when `27 | P`.
fn three_adic_ok(p: &BigInt) -> bool {
    !p.is_multiple_of(&BigInt::from(3)) || p.is_multiple_of(&BigInt::from(27))
}

/// `P0, Q0, D0` of a cubic `x^3 + a1 x^2 + a2 x + a3` and the halved
/// `P1, Q1, D1`, with `Q1 = 2^q1 * q0^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicData {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    #[serde(with = "big_string")]
    pub p0: BigInt,
    #[serde(with = "big_string")]
    pub q0: BigInt,
    #[serde(with = "big_string")]
    pub d0: BigInt,
    #[serde(with = "big_string")]
    pub p1: BigInt,
    #[serde(with = "big_string")]
    pub q1: BigInt,
    #[serde(with = "big_string")]
    pub d1: BigInt,
    /// `q0` in `Q1 = 2^q1 * q0^3`.
    #[serde(with = "big_string")]
    pub cube_root: BigInt,
    /// `q1` in `Q1 = 2^q1 * q0^3`.
    pub two_exponent: u8,
}

impl CubicData {
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        let (b1, b2, b3) = (BigInt::from(a1), BigInt::from(a2), BigInt::from(a3));
        let p0: BigInt = -(&b1 * &b1 * &b1 * 2i32) + &b1 * &b2 * 9i32 - &b3 * 27i32;
        let base: BigInt = &b1 * &b1 - &b2 * 3i32;
        let q0: BigInt = &base * &base * &base;
        let num: BigInt = &p0 * &p0 - &q0 * 4i32;
        assert!(num.is_multiple_of(&BigInt::from(27)));
        let d0: BigInt = -(num / 27i32);
        if q0.is_zero() || d0.is_zero() {
            return Err(Error::DegenerateCubic);
        }
        let (p1, q1, d1): (BigInt, BigInt, BigInt) = if p0.is_even() {
            (&p0 / 2i32, q0.clone(), &d0 / 4i32)
        } else {
            (p0.clone(), &q0 * 4i32, d0.clone())
        };
        debug_assert_eq!(&p1 * &p1 + &d1 * 27i32, q1);
        debug_assert!(three_adic_ok(&p1));
        let (two_exponent, cube_root) =
            two_cube_split(&q1).expect("Q1 is a cube or four times a cube");
        Ok(Self {
            a1,
            a2,
            a3,
            p0,
            q0,
            d0,
            p1,
            q1,
            d1,
            cube_root,
            two_exponent,
        })
    }

    /// `a1^2 - 3 a2`, the cube root of `Q0`.
    pub fn q0_base(&self) -> BigInt {
        BigInt::from(self.a1).pow(2) - BigInt::from(self.a2) * 3
    }

    /// `D1` as a machine integer, when class-group work on it is possible.
    pub fn d1_small(&self) -> Result<i64> {
        self.d1
            .to_i64()
            .ok_or_else(|| Error::DiscriminantTooLarge(self.d1.to_string()))
    }
}

/// `chi` for fixed `(P, D)` with `D < 0`, `3 !| P` or `27 | P` and
/// `Q = P^2 + 27D = 2^q1 q0^3`, `DQ != 0`.
#[derive(Debug)]
pub struct CubicCharacter {
    p: BigInt,
    d: i64,
    q: BigInt,
    modulus: BigInt,
    reps: Mutex<HashMap<FormClass, QuadForm>>,
}

impl CubicCharacter {
    pub fn new(p: BigInt, d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::IndefiniteDiscriminant);
        }
        if !three_adic_ok(&p) {
            return Err(Error::InvalidCharacter(format!("3 divides P = {p} but 27 does not")));
        }
        let q: BigInt = &p * &p + BigInt::from(d) * 27i32;
        if q.is_zero() {
            return Err(Error::InvalidCharacter("Q = P^2 + 27D vanishes".into()));
        }
        if two_cube_split(&q).is_none() {
            return Err(Error::InvalidCharacter(format!("Q = {q} is not 2^k times a cube")));
        }
        let modulus: BigInt = (&q * BigInt::from(d) * 3i32).abs();
        Ok(Self {
            p,
            d,
            q,
            modulus,
            reps: Mutex::new(HashMap::new()),
        })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `3DQ`, up to sign.
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// `((P - 3b(1+2w))/a)_3` for a form `(a, 2b, c)` of discriminant `4D`
    /// with `gcd(a, 3DQ) = 1`.
    pub fn chi_of_form(&self, f: &QuadForm) -> Result<SymbolValue> {
        if f.half_disc() != self.d {
            return Err(Error::DiscriminantMismatch(f.discriminant(), 4 * self.d));
        }
        let a = BigInt::from(f.a);
        if !a.gcd(&self.modulus).is_one() {
            return Err(Error::Hypothesis(format!("gcd({}, 3DQ) != 1", f.a)));
        }
        let b = BigInt::from(f.b());
        let num = EisensteinInt::new(&self.p - &b * 3i32, -(&b * 6i32));
        let v = cubic_jacobi_rational(&num, &a)?;
        assert_ne!(v, SymbolValue::Zero, "chi is never zero on admissible forms");
        Ok(v)
    }

    pub fn representative(&self, class: &FormClass) -> Result<QuadForm> {
        if let Some(f) = self.reps.lock().unwrap().get(class) {
            return Ok(*f);
        }
        let f = class.coprime_representative(&self.modulus)?;
        self.reps.lock().unwrap().insert(*class, f);
        Ok(f)
    }

    pub fn chi(&self, class: &FormClass) -> Result<SymbolValue> {
        if class.half_disc() != self.d {
            return Err(Error::DiscriminantMismatch(4 * class.half_disc(), 4 * self.d));
        }
        self.chi_of_form(&self.representative(class)?)
    }

    pub fn subgroup(&self) -> Result<Subgroup> {
        self.subgroup_in(ClassGroup::enumerate(self.d)?)
    }

    /// The kernel inside an already enumerated `H(4D)`.
    pub fn subgroup_in(&self, ambient: ClassGroup) -> Result<Subgroup> {
        if ambient.d != self.d {
            return Err(Error::DiscriminantMismatch(4 * ambient.d, 4 * self.d));
        }
        Subgroup::from_character(ambient, self.p.clone(), |k| self.chi(k))
    }

    /// First odd prime `p0 <= bound`, `p0 !| 3DPQ`, for which
    /// `D x^3 - Q x - 2Q = 0 (mod p0)` has no solution.
    pub fn witness_index3(&self, bound: u64) -> Option<u64> {
        let dpq = &self.q * &self.p * self.d * 3;
        arith::primes_between(3, bound).into_iter().find(|&p0| {
            if residue_big(&dpq, p0) == 0 {
                return false;
            }
            let dd = arith::residue_i128(self.d as i128, p0);
            let qq = residue_big(&self.q, p0);
            let q2 = 2 * qq % p0;
            (0..p0).all(|x| {
                let x3 = arith::mul_mod(arith::mul_mod(x, x, p0), x, p0);
                let lhs = arith::mul_mod(dd, x3, p0);
                let rhs = (arith::mul_mod(qq, x, p0) + q2) % p0;
                lhs != rhs
            })
        })
    }
}

/// A kernel of a character on `H(4D)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    pub ambient: ClassGroup,
    pub members: Vec<FormClass>,
    /// The `P` of the defining character.
    #[serde(with = "big_string")]
    pub p: BigInt,
    pub d: i64,
    pub chi_table: Vec<(FormClass, SymbolValue)>,
}

impl Subgroup {
    fn from_character(
        ambient: ClassGroup,
        p: BigInt,
        chi: impl Fn(&FormClass) -> Result<SymbolValue>,
    ) -> Result<Self> {
        let chi_table = ambient
            .classes
            .iter()
            .map(|k| chi(k).map(|v| (*k, v)))
            .collect::<Result<Vec<_>>>()?;
        let members = chi_table
            .iter()
            .filter(|(_, v)| *v == SymbolValue::One)
            .map(|(k, _)| *k)
            .collect();
        Ok(Self {
            d: ambient.d,
            ambient,
            members,
            p,
            chi_table,
        })
    }

    pub fn contains(&self, k: &FormClass) -> bool {
        self.members.contains(k)
    }

    /// `|H| / |G|`; always 1 or 3 for a cubic character.
    pub fn index(&self) -> usize {
        let idx = self.ambient.order() / self.members.len();
        debug_assert_eq!(idx * self.members.len(), self.ambient.order());
        idx
    }

    pub fn value(&self, k: &FormClass) -> Option<SymbolValue> {
        self.chi_table.iter().find(|(c, _)| c == k).map(|(_, v)| *v)
    }
}

/// `G(P, D)`.
pub fn subgroup_g(p: impl Into<BigInt>, d: i64) -> Result<Subgroup> {
    CubicCharacter::new(p.into(), d)?.subgroup()
}

/// `G(a1, a2, a3) = G(P1, D1)`, the subgroup whose classes represent the
/// primes where the cubic splits completely.
pub fn subgroup_for_cubic(a1: i64, a2: i64, a3: i64) -> Result<Subgroup> {
    character_for_cubic(&CubicData::new(a1, a2, a3)?)?.subgroup()
}

pub fn character_for_cubic(data: &CubicData) -> Result<CubicCharacter> {
    if data.d1.is_positive() {
        return Err(Error::IndefiniteDiscriminant);
    }
    CubicCharacter::new(data.p1.clone(), data.d1_small()?)
}

/// `G(a2, a3)` for `x^3 + a2 x + a3`, built from the character
/// `((b - 3a3'(1+2w))/a)_3` with `a3' = 2a3/(3 + (-1)^a3)` on
/// `H(-2^(1-(-1)^a3) (4a2^3 + 27a3^2))`, evaluated on representatives with
/// `a` prime to `3 a2 (4a2^3 + 27a3^2)`, and odd when `a3` is odd.
pub fn subgroup_depressed(a2: i64, a3: i64) -> Result<Subgroup> {
    let (x2, x3) = (a2 as i128, a3 as i128);
    let delta = 4 * x2 * x2 * x2 + 27 * x3 * x3;
    if a2 == 0 || a3 == 0 || delta == 0 {
        return Err(Error::DegenerateCubic);
    }
    if delta < 0 {
        return Err(Error::IndefiniteDiscriminant);
    }
    let (d, a3p, coprime_to) = if a3 % 2 == 0 {
        (-delta / 4, x3 / 2, 3 * x2 * delta / 4)
    } else {
        (-delta, x3, 6 * x2 * delta)
    };
    let d = i64::try_from(d).map_err(|_| Error::DiscriminantTooLarge(d.to_string()))?;
    let modulus = BigInt::from(coprime_to).abs();
    let ambient = ClassGroup::enumerate(d)?;
    let chi = |k: &FormClass| -> Result<SymbolValue> {
        let f = k.coprime_representative(&modulus)?;
        let b = f.b() as i128;
        let num = EisensteinInt::new(b - 3 * a3p, -6 * a3p);
        let v = cubic_jacobi_rational(&num, &BigInt::from(f.a))?;
        assert_ne!(v, SymbolValue::Zero);
        Ok(v)
    };
    Subgroup::from_character(ambient, BigInt::from(-27 * a3p), chi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: i64, b: i64, c: i64) -> FormClass {
        FormClass::of(a, b, c).unwrap()
    }

    fn members(g: &Subgroup) -> Vec<String> {
        g.members.iter().map(|k| k.to_string()).collect()
    }

    #[test]
    fn cubic_data_examples() {
        let c = CubicData::new(0, -1, 2).unwrap();
        assert_eq!((c.p0.clone(), c.q0.clone(), c.d0.clone()), (BigInt::from(-54), BigInt::from(27), BigInt::from(-104)));
        assert_eq!((c.p1.clone(), c.q1.clone(), c.d1.clone()), (BigInt::from(-27), BigInt::from(27), BigInt::from(-26)));
        assert_eq!((c.two_exponent, c.cube_root.clone()), (0, BigInt::from(3)));

        let c = CubicData::new(2, 1, 3).unwrap();
        assert_eq!((c.p0.clone(), c.q0.clone(), c.d0.clone()), (BigInt::from(-79), BigInt::from(1), BigInt::from(-231)));
        assert_eq!((c.p1.clone(), c.q1.clone(), c.d1.clone()), (BigInt::from(-79), BigInt::from(4), BigInt::from(-231)));
        assert_eq!((c.two_exponent, c.cube_root.clone()), (2, BigInt::from(1)));

        let c = CubicData::new(1, 1, 1).unwrap();
        assert_eq!((c.p0.clone(), c.q0.clone(), c.d0.clone()), (BigInt::from(-20), BigInt::from(-8), BigInt::from(-16)));
        assert_eq!((c.p1.clone(), c.q1.clone(), c.d1.clone()), (BigInt::from(-10), BigInt::from(-8), BigInt::from(-4)));
        assert_eq!((c.two_exponent, c.cube_root.clone()), (0, BigInt::from(-2)));

        assert_eq!(CubicData::new(0, 0, 0), Err(Error::DegenerateCubic));
        // (x-1)^2 (x+2): D0 = 0
        assert_eq!(CubicData::new(0, -3, 2), Err(Error::DegenerateCubic));
    }

    #[test]
    fn cubic_data_invariants() {
        for a1 in -6..=6 {
            for a2 in -6..=6 {
                for a3 in -6..=6 {
                    let Ok(c) = CubicData::new(a1, a2, a3) else { continue };
                    // discriminant of the cubic by its usual expansion
                    let (x1, x2, x3) = (a1 as i128, a2 as i128, a3 as i128);
                    let disc = x1 * x1 * x2 * x2 - 4 * x2.pow(3) - 4 * x1.pow(3) * x3 - 27 * x3 * x3
                        + 18 * x1 * x2 * x3;
                    assert_eq!(c.d0, BigInt::from(disc));
                    assert_eq!(&c.p1 * &c.p1 + &c.d1 * 27, c.q1);
                    assert!(three_adic_ok(&c.p1));
                    let q = BigInt::from(1 << c.two_exponent) * c.cube_root.pow(3);
                    assert_eq!(q, c.q1);
                }
            }
        }
    }

    #[test]
    fn two_cube_split_cases() {
        assert_eq!(two_cube_split(&BigInt::from(27)), Some((0, BigInt::from(3))));
        assert_eq!(two_cube_split(&BigInt::from(4)), Some((2, BigInt::from(1))));
        assert_eq!(two_cube_split(&BigInt::from(-2)), Some((1, BigInt::from(-1))));
        assert_eq!(two_cube_split(&BigInt::from(-8)), Some((0, BigInt::from(-2))));
        assert_eq!(two_cube_split(&BigInt::from(-432)), Some((1, BigInt::from(-6))));
        assert_eq!(two_cube_split(&BigInt::from(12)), None);
        assert_eq!(two_cube_split(&BigInt::from(0)), None);
    }

    #[test]
    fn chi_examples() {
        let chi = CubicCharacter::new(BigInt::from(-27), -26).unwrap();
        assert_eq!(chi.chi(&k(1, 0, 26)).unwrap(), SymbolValue::One);
        assert_eq!(chi.chi(&k(3, 2, 9)).unwrap(), SymbolValue::Omega);
        assert_eq!(chi.chi(&k(5, 4, 6)).unwrap(), SymbolValue::Omega);
        assert_eq!(chi.chi(&k(2, 0, 13)).unwrap(), SymbolValue::One);
        // the worked representatives
        let f = QuadForm { a: 17, bmid: 10, c: 3 };
        assert_eq!(chi.chi_of_form(&f).unwrap(), SymbolValue::Omega);
        let f = QuadForm { a: 31, bmid: -12, c: 2 };
        assert_eq!(chi.chi_of_form(&f).unwrap(), SymbolValue::One);
    }

    #[test]
    fn character_rejects_bad_parameters() {
        // 3 | 6 but 27 does not
        assert!(matches!(CubicCharacter::new(BigInt::from(6), -26), Err(Error::InvalidCharacter(_))));
        // Q = 1 + 27*(-1) = -26 is not 2^k times a cube
        assert!(matches!(CubicCharacter::new(BigInt::from(1), -1), Err(Error::InvalidCharacter(_))));
        assert_eq!(CubicCharacter::new(BigInt::from(28), 29).err(), Some(Error::IndefiniteDiscriminant));
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(members(&subgroup_g(-27, -26).unwrap()), ["[1,0,26]", "[2,0,13]"]);
        assert_eq!(members(&subgroup_g(28, -29).unwrap()), ["[1,0,29]", "[2,2,15]"]);
        assert_eq!(members(&subgroup_g(32, -38).unwrap()), ["[1,0,38]", "[2,0,19]"]);
        assert_eq!(members(&subgroup_for_cubic(0, -1, 2).unwrap()), ["[1,0,26]", "[2,0,13]"]);
        assert_eq!(
            members(&subgroup_for_cubic(2, 1, 3).unwrap()),
            ["[1,0,231]", "[3,0,77]", "[7,0,33]", "[11,0,21]"]
        );
    }

    #[test]
    fn x3_minus_x_minus_1_subgroup() {
        // primes splitting x^3 - x - 1 are those of the form x^2 + 23y^2
        let g = subgroup_for_cubic(0, -1, -1).unwrap();
        assert_eq!(g.ambient.discriminant(), -92);
        assert_eq!(members(&g), ["[1,0,23]"]);
        assert_eq!(g.index(), 3);
    }

    #[test]
    fn depressed_examples() {
        let g = subgroup_depressed(-1, 2).unwrap();
        assert_eq!(members(&g), ["[1,0,26]", "[2,0,13]"]);
        let g = subgroup_depressed(-1, -1).unwrap();
        assert_eq!(g.ambient.discriminant(), -92);
        let g = subgroup_depressed(1, 1).unwrap();
        assert_eq!(g.ambient.discriminant(), -124);
        let c = CubicData::new(0, 1, 1).unwrap();
        assert_eq!(BigInt::from(g.ambient.discriminant()), c.d1 * 4);
        assert!(subgroup_depressed(0, 1).is_err());
        assert!(subgroup_depressed(-3, 1).is_err());
    }

    #[test]
    fn depressed_matches_general_construction() {
        for a2 in -5i64..=5 {
            for a3 in -5i64..=5 {
                let Ok(dep) = subgroup_depressed(a2, a3) else { continue };
                let gen = subgroup_for_cubic(0, a2, a3).unwrap();
                assert_eq!(dep.ambient, gen.ambient, "a2={a2} a3={a3}");
                assert_eq!(dep.members, gen.members, "a2={a2} a3={a3}");
            }
        }
    }

    #[test]
    fn witness_examples() {
        let chi = CubicCharacter::new(BigInt::from(-27), -26).unwrap();
        assert_eq!(chi.witness_index3(100), Some(5));
        assert_eq!(chi.witness_index3(3), None);
        let chi = CubicCharacter::new(BigInt::from(28), -29).unwrap();
        let w = chi.witness_index3(100).unwrap();
        assert!(w <= 100);
        assert_eq!(chi.subgroup().unwrap().index(), 3);
    }

    #[test]
    fn character_law_and_well_definedness() {
        for (p, d) in [(-27i64, -26i64), (27, -26), (28, -29), (32, -38), (-79, -231), (-10, -4)] {
            let chi = CubicCharacter::new(BigInt::from(p), d).unwrap();
            let h = ClassGroup::enumerate(d).unwrap();
            assert_eq!(chi.chi(&h.identity()).unwrap(), SymbolValue::One);
            for x in &h.classes {
                let cx = chi.chi(x).unwrap();
                for y in &h.classes {
                    let xy = x.compose(y).unwrap();
                    assert_eq!(chi.chi(&xy).unwrap(), cx * chi.chi(y).unwrap());
                }
                // a second representative, prime to a larger modulus
                let m2 = chi.modulus() * BigInt::from(5 * 7 * 11 * 17 * 19);
                let f2 = x.coprime_representative(&m2).unwrap();
                assert_eq!(chi.chi_of_form(&f2).unwrap(), cx);
            }
            let g = chi.subgroup().unwrap();
            assert!(matches!(g.index(), 1 | 3));
            for x in &g.members {
                assert!(g.contains(&x.inverse()));
                for y in &g.members {
                    assert!(g.contains(&x.compose(y).unwrap()));
                }
            }
        }
    }
}
