// SPDX-License-Identifier: Apache-2.0

//! Positive definite binary quadratic forms `a x^2 + 2b xy + c y^2` with
//! `b^2 - ac = D < 0`, i.e. discriminant `4D`.
//!
//! Forms keep the full (even) middle coefficient in `bmid`, so `[3,2,9]`
//! here is written exactly as `[a,2b,c]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{self, ext_gcd};
use crate::{Error, Result};

pub use crate::arith::sqrt_mod_p;

/// Reduced-class enumeration scans `O(|D|)` candidates; beyond this the
/// enumeration is refused.
pub const MAX_ENUMERATION_DISCRIMINANT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub bmid: i64,
    pub c: i64,
}

impl QuadForm {
    /// A primitive positive definite form with even middle coefficient.
    pub fn new(a: i64, bmid: i64, c: i64) -> Result<Self> {
        let f = Self { a, bmid, c };
        if bmid % 2 != 0 {
            return Err(Error::Hypothesis(format!("{f} has odd middle coefficient")));
        }
        if a <= 0 || c <= 0 || f.half_disc() >= 0 {
            return Err(Error::IndefiniteForm(f.to_string()));
        }
        if a.gcd(&bmid).gcd(&c) != 1 {
            return Err(Error::ImprimitiveForm(f.to_string()));
        }
        Ok(f)
    }

    /// Half the middle coefficient.
    pub fn b(&self) -> i64 {
        self.bmid / 2
    }

    /// `D = b^2 - ac`.
    pub fn half_disc(&self) -> i64 {
        let b = self.b() as i128;
        let d = b * b - self.a as i128 * self.c as i128;
        i64::try_from(d).expect("discriminant fits in i64")
    }

    pub fn discriminant(&self) -> i64 {
        4 * self.half_disc()
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.bmid as i128 * x * y + self.c as i128 * y * y
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.bmid, self.c);
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
    }

    /// Image under the substitution `(x, y) -> (alpha x + beta y, gamma x + delta y)`.
    pub fn transform(&self, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        let (a, b, c) = (self.a as i128, self.b() as i128, self.c as i128);
        let (al, be, ga, de) = (alpha as i128, beta as i128, gamma as i128, delta as i128);
        let na = a * al * al + 2 * b * al * ga + c * ga * ga;
        let nb = a * al * be + b * (al * de + be * ga) + c * ga * de;
        let nc = a * be * be + 2 * b * be * de + c * de * de;
        let narrow = |v: i128| {
            i64::try_from(v).map_err(|_| Error::Hypothesis("form coefficient overflow".into()))
        };
        Ok(Self {
            a: narrow(na)?,
            bmid: narrow(2 * nb)?,
            c: narrow(nc)?,
        })
    }

    /// `(a, 2b, c) ~ (a, 2ak + 2b, ak^2 + 2bk + c)` with `k` chosen to put
    /// the middle coefficient in `(-a, a]`.
    fn normalize(&self) -> Self {
        let (a, b) = (self.a as i128, self.bmid as i128);
        let two_a = 2 * a;
        let nb = (b + a - 1).rem_euclid(two_a) - (a - 1);
        let k = (nb - b) / two_a;
        let nc = a * k * k + b * k + self.c as i128;
        Self {
            a: self.a,
            bmid: nb as i64,
            c: nc as i64,
        }
    }

    /// Brings a primitive positive definite form to its reduced class
    /// representative.
    pub fn reduce(&self) -> Result<FormClass> {
        let f = Self::new(self.a, self.bmid, self.c)?;
        let mut f = f.normalize();
        loop {
            if f.a > f.c {
                // (a, b, c) ~ (c, -b, a)
                f = Self {
                    a: f.c,
                    bmid: -f.bmid,
                    c: f.a,
                }
                .normalize();
                continue;
            }
            if f.a == f.c && f.bmid < 0 {
                f.bmid = -f.bmid;
            }
            break;
        }
        debug_assert!(f.is_reduced());
        debug_assert_eq!(f.half_disc(), self.half_disc());
        Ok(FormClass(f))
    }

    /// Whether the form takes the value `n` with `|x|, |y| <= bound`.
    pub fn represents(&self, n: i128, bound: i64) -> bool {
        (-bound..=bound).any(|x| (0..=bound).any(|y| self.eval(x, y) == n))
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.bmid, self.c)
    }
}

/// An equivalence class, held as its reduced representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FormClass(QuadForm);

impl TryFrom<QuadForm> for FormClass {
    type Error = Error;
    fn try_from(f: QuadForm) -> Result<Self> {
        let class = f.reduce()?;
        if class.0 != f {
            return Err(Error::Hypothesis(format!("{f} is not reduced")));
        }
        Ok(class)
    }
}

impl FromStr for FormClass {
    type Err = Error;
    /// Parses `[a,2b,c]`; the form must already be reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Hypothesis(format!("cannot parse form class {s:?}"));
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let [a, bmid, c] = v[..] else { return Err(bad()) };
        Self::try_from(QuadForm::new(a, bmid, c)?)
    }
}

impl TryFrom<String> for FormClass {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FormClass> for String {
    fn from(k: FormClass) -> String {
        k.to_string()
    }
}

impl From<FormClass> for QuadForm {
    fn from(k: FormClass) -> QuadForm {
        k.0
    }
}

impl FormClass {
    pub fn of(a: i64, bmid: i64, c: i64) -> Result<Self> {
        QuadForm::new(a, bmid, c)?.reduce()
    }

    pub fn form(&self) -> QuadForm {
        self.0
    }

    pub fn half_disc(&self) -> i64 {
        self.0.half_disc()
    }

    pub fn identity(d: i64) -> Self {
        FormClass(QuadForm { a: 1, bmid: 0, c: -d })
    }

    pub fn is_identity(&self) -> bool {
        self.0.a == 1
    }

    pub fn inverse(&self) -> Self {
        let f = self.0;
        QuadForm {
            a: f.a,
            bmid: -f.bmid,
            c: f.c,
        }
        .reduce()
        .expect("mirror of a reduced form is primitive and definite")
    }

    /// Composition via `t = gcd(A1, A2, B1 + B2) = A1 u + A2 v + (B1 + B2) w`,
    /// `A3 = A1 A2 / t^2`, `B3 = B2 + (A2/t)((B1 - B2) v - C2 w)`,
    /// `C3 = (B3^2 - D)/A3`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let (g, u, v, w) = composition_bezout(self, other)?;
        compose_with(self, other, g, u, v, w)
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut acc = Self::identity(self.half_disc());
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            base = base.compose(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// A form in this class whose first coefficient is prime to `m`.
    ///
    /// Scans coprime pairs `(x, y)` on square shells of growing radius until
    /// `f(x, y)` is prime to `m`, then completes `(x, y)` to a unimodular
    /// substitution. The middle coefficient is normalized into `(-a, a]`.
    pub fn coprime_representative(&self, m: &BigInt) -> Result<QuadForm> {
        let f = self.0;
        let coprime = |n: i128| BigInt::from(n).gcd(m).is_one();
        if coprime(f.a as i128) {
            return Ok(f);
        }
        let cap = (m * 10u32).min(BigInt::from(1u64 << 20));
        let cap: u64 = cap.try_into().unwrap_or(1 << 20);
        for r in 1..=cap as i64 {
            for y in 0..=r {
                for x in -r..=r {
                    if x.abs().max(y) != r || x.gcd(&y) != 1 || (y == 0 && x < 0) {
                        continue;
                    }
                    if !coprime(f.eval(x, y)) {
                        continue;
                    }
                    // x*delta - beta*y = 1
                    let (_, s, t) = ext_gcd(x as i128, y as i128);
                    let (delta, beta) = (s as i64, -t as i64);
                    let g = f.transform(x, beta, y, delta)?.normalize();
                    debug_assert_eq!(g.half_disc(), f.half_disc());
                    return Ok(g);
                }
            }
        }
        Err(Error::RadiusExceeded(cap))
    }
}

/// `(t, u, v, w)` with `t = gcd(A1, A2, B1 + B2) = A1 u + A2 v + (B1 + B2) w`.
pub fn composition_bezout(k1: &FormClass, k2: &FormClass) -> Result<(i128, i128, i128, i128)> {
    let (d1, d2) = (k1.half_disc(), k2.half_disc());
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch(4 * d1, 4 * d2));
    }
    let (f1, f2) = (k1.0, k2.0);
    let (g1, u1, v1) = ext_gcd(f1.a as i128, f2.a as i128);
    let (t, x, w) = ext_gcd(g1, (f1.b() + f2.b()) as i128);
    Ok((t, u1 * x, v1 * x, w))
}

/// Composition with a caller-supplied Bezout triple for `t`.
pub fn compose_with(
    k1: &FormClass,
    k2: &FormClass,
    t: i128,
    u: i128,
    v: i128,
    w: i128,
) -> Result<FormClass> {
    let (d1, d2) = (k1.half_disc(), k2.half_disc());
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch(4 * d1, 4 * d2));
    }
    let d = d1 as i128;
    let (f1, f2) = (k1.0, k2.0);
    let (a1, b1, a2, b2, c2) = (
        f1.a as i128,
        f1.b() as i128,
        f2.a as i128,
        f2.b() as i128,
        f2.c as i128,
    );
    assert_eq!(a1 * u + a2 * v + (b1 + b2) * w, t, "invalid Bezout triple");
    let a3 = a1 * a2 / (t * t);
    let b3 = b2 + (a2 / t) * ((b1 - b2) * v - c2 * w);
    // shrink B3 mod A3 before forming C3, it only changes the form within its class
    let b3 = b3.rem_euclid(a3);
    let num = b3 * b3 - d;
    assert!(num % a3 == 0, "composition produced a non-integral C3");
    let c3 = num / a3;
    let narrow = |v: i128| {
        i64::try_from(v).map_err(|_| Error::Hypothesis("composition overflow".into()))
    };
    QuadForm {
        a: narrow(a3)?,
        bmid: narrow(2 * b3)?,
        c: narrow(c3)?,
    }
    .reduce()
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0.a, self.0.bmid, self.0.c)
    }
}

/// The form class group `H(4D)` for `D < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub d: i64,
    pub classes: Vec<FormClass>,
}

impl ClassGroup {
    /// All reduced primitive forms of discriminant `4D`, ordered by `a`,
    /// then `|2b|`, positive middle coefficient first.
    pub fn enumerate(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::IndefiniteDiscriminant);
        }
        if d.unsigned_abs() > MAX_ENUMERATION_DISCRIMINANT as u64 {
            return Err(Error::DiscriminantTooLarge(d.to_string()));
        }
        let disc = 4 * d as i128;
        let mut classes = Vec::new();
        let mut a: i64 = 1;
        // reduced forms have 3a^2 <= |disc|/... i.e. 3a^2 <= 4|D|
        while 3 * (a as i128) * (a as i128) <= -disc {
            let mut bmid = if a % 2 == 0 { -a + 2 } else { -a + 1 };
            while bmid <= a {
                let num = bmid as i128 * bmid as i128 - disc;
                if num % (4 * a as i128) == 0 {
                    let c = (num / (4 * a as i128)) as i64;
                    let f = QuadForm { a, bmid, c };
                    if f.is_reduced() && a.gcd(&bmid).gcd(&c) == 1 {
                        classes.push(FormClass(f));
                    }
                }
                bmid += 2;
            }
            a += 1;
        }
        classes.sort_by_key(|k| (k.0.a, k.0.bmid.abs(), k.0.bmid < 0));
        Ok(Self { d, classes })
    }

    pub fn discriminant(&self) -> i64 {
        4 * self.d
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn identity(&self) -> FormClass {
        FormClass::identity(self.d)
    }

    pub fn contains(&self, k: &FormClass) -> bool {
        self.classes.contains(k)
    }

    pub fn index_of(&self, k: &FormClass) -> Option<usize> {
        self.classes.iter().position(|c| c == k)
    }
}

/// The class of `(p, 2b, (b^2 - D)/p)` with `b^2 = D (mod p)`, a class
/// representing the odd prime `p`.
pub fn class_of_prime(p: u64, d: i64) -> Result<FormClass> {
    if p < 3 || p % 2 == 0 || !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d >= 0 {
        return Err(Error::IndefiniteDiscriminant);
    }
    if arith::jacobi(d as i128, p) != 1 {
        return Err(Error::NotRepresented { p, disc: 4 * d });
    }
    let b = sqrt_mod_p(d as i128, p)? as i128;
    let c = (b * b - d as i128) / p as i128;
    let c = i64::try_from(c).map_err(|_| Error::Hypothesis("prime form overflow".into()))?;
    QuadForm {
        a: p as i64,
        bmid: 2 * b as i64,
        c,
    }
    .reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: i64, b: i64, c: i64) -> FormClass {
        FormClass::of(a, b, c).unwrap()
    }

    fn names(g: &ClassGroup) -> Vec<String> {
        g.classes.iter().map(|k| k.to_string()).collect()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(k(31, -12, 2).to_string(), "[2,0,13]");
        assert_eq!(k(1, 0, 26).to_string(), "[1,0,26]");
        assert_eq!(k(3, -10, 17).to_string(), "[3,2,9]");
        assert_eq!(k(17, 10, 3).to_string(), "[3,2,9]");
        assert_eq!(k(197, 88, 11).to_string(), "[11,0,21]");
        assert_eq!(k(89, 12, 3).to_string(), "[3,0,77]");
        assert_eq!(k(61, 28, 7).to_string(), "[7,0,33]");
    }

    #[test]
    fn reduce_rejects_bad_forms() {
        assert!(matches!(QuadForm::new(2, 0, 2), Err(Error::ImprimitiveForm(_))));
        assert!(matches!(QuadForm::new(1, 4, 1), Err(Error::IndefiniteForm(_))));
        assert!(matches!(QuadForm::new(-1, 0, -5), Err(Error::IndefiniteForm(_))));
        assert!(QuadForm::new(1, 1, 5).is_err());
    }

    #[test]
    fn reduce_boundary_signs() {
        // |b| = a and a = c boundaries pick the nonnegative middle coefficient
        assert_eq!(k(2, -2, 15).to_string(), "[2,2,15]");
        assert_eq!(k(5, -4, 5).form().bmid, 4);
    }

    #[test]
    fn enumerate_examples() {
        let h = ClassGroup::enumerate(-26).unwrap();
        assert_eq!(
            names(&h),
            ["[1,0,26]", "[2,0,13]", "[3,2,9]", "[3,-2,9]", "[5,4,6]", "[5,-4,6]"]
        );
        let h = ClassGroup::enumerate(-29).unwrap();
        assert_eq!(
            names(&h),
            ["[1,0,29]", "[2,2,15]", "[3,2,10]", "[3,-2,10]", "[5,2,6]", "[5,-2,6]"]
        );
        let h = ClassGroup::enumerate(-38).unwrap();
        assert_eq!(
            names(&h),
            ["[1,0,38]", "[2,0,19]", "[3,2,13]", "[3,-2,13]", "[6,4,7]", "[6,-4,7]"]
        );
        let h = ClassGroup::enumerate(-231).unwrap();
        let mut got = names(&h);
        got.sort();
        let mut want: Vec<String> = [
            "[1,0,231]", "[3,0,77]", "[7,0,33]", "[11,0,21]", "[8,2,29]", "[8,-2,29]",
            "[5,4,47]", "[5,-4,47]", "[15,6,16]", "[15,-6,16]", "[13,8,19]", "[13,-8,19]",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        want.sort();
        assert_eq!(got, want);
        assert!(ClassGroup::enumerate(5).is_err());
    }

    #[test]
    fn small_class_numbers() {
        // h(4D) for D = -1..-10: -4, -8, -12, -16, -20, -24, -28, -32, -36, -40
        let known = [1, 1, 1, 1, 2, 2, 1, 2, 2, 2];
        for (i, h) in known.iter().enumerate() {
            let d = -(i as i64) - 1;
            let g = ClassGroup::enumerate(d).unwrap();
            assert_eq!(g.order(), *h, "D = {d}");
            for c in &g.classes {
                assert!(c.form().represents(c.form().a as i128, 1));
            }
        }
    }

    #[test]
    fn compose_examples() {
        let a = k(3, 2, 9);
        assert!(a.compose(&k(3, -2, 9)).unwrap().is_identity());
        assert_eq!(a.compose(&a).unwrap(), k(3, -2, 9));
        let id = FormClass::identity(-26);
        for c in ClassGroup::enumerate(-26).unwrap().classes {
            assert_eq!(id.compose(&c).unwrap(), c);
        }
        assert!(matches!(
            a.compose(&FormClass::identity(-29)),
            Err(Error::DiscriminantMismatch(..))
        ));
    }

    #[test]
    fn compose_worked_square() {
        // t = 1 with (u, v, w) = (1, 0, -1): (A3, B3, C3) = (9, 28, 90)
        let a = k(3, 2, 9);
        let sq = compose_with(&a, &a, 1, 1, 0, -1).unwrap();
        assert_eq!(sq, k(9, 56, 90));
        assert_eq!(sq, k(3, -2, 9));
    }

    #[test]
    fn composition_independent_of_bezout_triple() {
        for d in [-26i64, -29, -38, -231, -47, -71] {
            let g = ClassGroup::enumerate(d).unwrap();
            for x in &g.classes {
                for y in &g.classes {
                    let (t, u, v, w) = composition_bezout(x, y).unwrap();
                    let base = compose_with(x, y, t, u, v, w).unwrap();
                    let (a1, a2, s) = (x.form().a as i128, y.form().a as i128, (x.form().b() + y.form().b()) as i128);
                    // shift along the kernel of (A1, A2, B1+B2)
                    for (du, dv, dw) in [(a2, -a1, 0), (s, 0, -a1), (0, s, -a2)] {
                        for m in [-2i128, 1, 3] {
                            let other = compose_with(x, y, t, u + m * du, v + m * dv, w + m * dw).unwrap();
                            assert_eq!(other, base);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(k(3, 2, 9).inverse(), k(3, -2, 9));
        assert_eq!(k(1, 0, 26).inverse(), k(1, 0, 26));
        assert_eq!(k(5, 4, 6).inverse(), k(5, -4, 6));
    }

    #[test]
    fn group_axioms_small_discriminants() {
        for d in -300i64..=-1 {
            let g = ClassGroup::enumerate(d).unwrap();
            let id = g.identity();
            assert!(g.contains(&id));
            let cls = &g.classes;
            for x in cls {
                assert_eq!(x.half_disc(), d);
                assert_eq!(x.compose(&id).unwrap(), *x);
                assert!(x.compose(&x.inverse()).unwrap().is_identity());
                for y in cls.iter().step_by(1 + cls.len() / 6) {
                    let xy = x.compose(y).unwrap();
                    assert!(g.contains(&xy));
                    assert_eq!(xy, y.compose(x).unwrap());
                    for z in cls.iter().step_by(1 + cls.len() / 4) {
                        let l = xy.compose(z).unwrap();
                        let r = x.compose(&y.compose(z).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn coprime_representative_examples() {
        let m = BigInt::from(3 * 26 * 27);
        for (a, b, c) in [(2, 0, 13), (3, 2, 9), (5, 4, 6), (5, -4, 6), (1, 0, 26)] {
            let class = k(a, b, c);
            let f = class.coprime_representative(&m).unwrap();
            assert!(BigInt::from(f.a).gcd(&m).is_one());
            assert!(f.a > 0);
            assert_eq!(f.half_disc(), -26);
            assert_eq!(f.reduce().unwrap(), class);
        }
        assert_eq!(
            FormClass::identity(-26).coprime_representative(&BigInt::from(123456)).unwrap(),
            QuadForm { a: 1, bmid: 0, c: 26 }
        );
        // [3,2,9] is first moved to a = 17 = f(-2, 1)
        assert_eq!(k(3, 2, 9).coprime_representative(&m).unwrap().a, 17);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod_p(5, 31).unwrap(), 6);
        assert_eq!(sqrt_mod_p(9, 13).unwrap(), 3);
        assert!(sqrt_mod_p(3, 7).is_err());
    }

    #[test]
    fn class_of_prime_examples() {
        assert_eq!(class_of_prime(31, -26).unwrap(), k(2, 0, 13));
        assert_eq!(class_of_prime(197, -231).unwrap(), k(11, 0, 21));
        assert_eq!(class_of_prime(89, -231).unwrap(), k(3, 0, 77));
        assert!(matches!(class_of_prime(11, -26), Err(Error::NotRepresented { .. })));
    }

    #[test]
    fn class_of_prime_represents_prime() {
        for d in [-26i64, -29, -38, -231, -5, -101] {
            for p in arith::primes_between(3, 400) {
                if (4 * d).rem_euclid(p as i64) == 0 || arith::jacobi(d as i128, p) != 1 {
                    continue;
                }
                let class = class_of_prime(p, d).unwrap();
                let bound = (p as f64).sqrt() as i64 + 1;
                assert!(class.form().represents(p as i128, bound), "p={p} D={d}");
            }
        }
    }

    #[test]
    fn class_from_form_requires_reduced() {
        assert_eq!(FormClass::try_from(QuadForm { a: 3, bmid: 2, c: 9 }).unwrap(), k(3, 2, 9));
        assert!(FormClass::try_from(QuadForm { a: 17, bmid: 10, c: 3 }).is_err());
    }

    #[test]
    fn class_parse_and_json() {
        assert_eq!("[3,-2,9]".parse::<FormClass>().unwrap(), k(3, -2, 9));
        assert_eq!(" [1, 0, 26] ".parse::<FormClass>().unwrap(), k(1, 0, 26));
        assert!("[3,2]".parse::<FormClass>().is_err());
        assert!("[17,10,3]".parse::<FormClass>().is_err());
        assert!("(1,0,26)".parse::<FormClass>().is_err());
        let h = ClassGroup::enumerate(-26).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert!(s.contains("\"[3,-2,9]\""));
        assert_eq!(serde_json::from_str::<ClassGroup>(&s).unwrap(), h);
    }
}
