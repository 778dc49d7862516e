// SPDX-License-Identifier: Apache-2.0

//! Root counts of `x^3 + a1 x^2 + a2 x + a3` modulo `p` and the equivalent
//! statements characterizing three roots, plus the cubic-surd criterion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, legendre_big, residue_big, residue_i128, PrimeField};
use crate::character::{character_for_cubic, subgroup_g, CubicData, Subgroup};
use crate::quadform::class_of_prime;
use crate::sequences::{binomial_sum, lucas_mod, s_mod, u_mod};
use crate::{Error, Result};

/// Labels of the equivalent three-root statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Statement {
    /// Three distinct roots mod `p`.
    #[serde(rename = "i")]
    I,
    /// `p` is represented by a class of `G(P1, D1)`.
    #[serde(rename = "ii")]
    II,
    /// `p | u_{p-2}(a1,a2,a3)`.
    #[serde(rename = "iii")]
    III,
    /// `p | u_p(0, -3(a1^2-3a2), 2a1^3-9a1a2+27a3)`.
    #[serde(rename = "iv")]
    IV,
    /// `s_{p+1} = a1^2 - 2a2 (mod p)`.
    #[serde(rename = "v")]
    V,
    /// `p | U_{(p-(p/3))/3}(P0, Q0)`.
    #[serde(rename = "vi")]
    VI,
    /// `V_{(p-(p/3))/3}(P0, Q0) = 2(a1^2-3a2)^{(1-(p/3))/2} (mod p)`.
    #[serde(rename = "vii")]
    VII,
    /// `U_{2[p/3]+1}(P0, Q0) = (-Q0)^{[p/3]} (mod p)`.
    #[serde(rename = "vii'")]
    VIIPrime,
    /// The binomial sum vanishes mod `p`.
    #[serde(rename = "viii")]
    VIII,
    /// `p | u_p(0, a2, a3)`, for `a1 = 0`.
    #[serde(rename = "ix")]
    IX,
}

impl Statement {
    pub const ALL: [Statement; 10] = [
        Statement::I,
        Statement::II,
        Statement::III,
        Statement::IV,
        Statement::V,
        Statement::VI,
        Statement::VII,
        Statement::VIIPrime,
        Statement::VIII,
        Statement::IX,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Statement::I => "i",
            Statement::II => "ii",
            Statement::III => "iii",
            Statement::IV => "iv",
            Statement::V => "v",
            Statement::VI => "vi",
            Statement::VII => "vii",
            Statement::VIIPrime => "vii'",
            Statement::VIII => "viii",
            Statement::IX => "ix",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Verdicts of every statement at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub p: u64,
    pub cubic: (i64, i64, i64),
    pub applicable: Vec<Statement>,
    pub verdicts: BTreeMap<Statement, bool>,
    pub skipped: BTreeMap<Statement, String>,
    pub legendre_d0: i8,
    pub root_count: u8,
}

impl CriterionReport {
    /// All applicable verdicts coincide.
    pub fn consistent(&self) -> bool {
        let mut it = self.verdicts.values();
        match it.next() {
            Some(first) => it.all(|v| v == first),
            None => true,
        }
    }

    /// The common verdict, when consistent.
    pub fn three_roots(&self) -> Option<bool> {
        self.consistent()
            .then(|| self.verdicts.get(&Statement::I).copied())
            .flatten()
    }

    /// Statements disagreeing with statement (i).
    pub fn disagreements(&self) -> Vec<Statement> {
        let Some(&base) = self.verdicts.get(&Statement::I) else {
            return Vec::new();
        };
        self.verdicts
            .iter()
            .filter(|(_, &v)| v != base)
            .map(|(s, _)| *s)
            .collect()
    }
}

/// Distinct roots of the cubic mod `p`, and `(D0/p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCount {
    pub count: u8,
    pub legendre_d0: i8,
}

fn require_prime_above_3(p: u64) -> Result<()> {
    if p <= 3 || !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Counts distinct roots by brute force; when `p !| D0` the count is checked
/// against `(D0/p)`: one root for `-1`, none or three for `+1`.
pub fn count_roots(a1: i64, a2: i64, a3: i64, p: u64) -> Result<RootCount> {
    require_prime_above_3(p)?;
    let f = PrimeField::new(p)?;
    let (c1, c2, c3) = (f.from_i64(a1), f.from_i64(a2), f.from_i64(a3));
    let count = (0..p)
        .filter(|&x| {
            // Horner
            let v = f.add(f.mul(f.add(f.mul(f.add(x, c1), x), c2), x), c3);
            v == 0
        })
        .count() as u8;
    let d0 = CubicData::discriminant(a1, a2, a3);
    let legendre_d0 = legendre_big(&d0, p);
    match legendre_d0 {
        1 => assert!(count == 0 || count == 3, "({a1},{a2},{a3}) mod {p}: {count} roots"),
        -1 => assert_eq!(count, 1, "({a1},{a2},{a3}) mod {p}"),
        _ => {}
    }
    Ok(RootCount { count, legendre_d0 })
}

/// `(p/3)` for a prime `p > 3`.
fn legendre_p_3(p: u64) -> i64 {
    if p % 3 == 1 {
        1
    } else {
        -1
    }
}

/// All statements for one cubic, with `G(P1, D1)` built once.
#[derive(Clone, Debug)]
pub struct CubicCriteria {
    pub data: CubicData,
    subgroup: std::result::Result<Subgroup, String>,
}

impl CubicCriteria {
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        let data = CubicData::new(a1, a2, a3)?;
        let subgroup = character_for_cubic(&data)
            .and_then(|chi| chi.subgroup())
            .map_err(|e| e.to_string());
        Ok(Self { data, subgroup })
    }

    /// With a precomputed `G(P1, D1)`, or the reason it is unavailable.
    pub fn from_parts(data: CubicData, subgroup: std::result::Result<Subgroup, String>) -> Self {
        Self { data, subgroup }
    }

    pub fn subgroup(&self) -> Option<&Subgroup> {
        self.subgroup.as_ref().ok()
    }

    /// Evaluates every statement whose hypotheses hold at `p`; requires
    /// `p > 3` prime with `p !| D0 Q0`.
    pub fn evaluate(&self, p: u64) -> Result<CriterionReport> {
        require_prime_above_3(p)?;
        let c = &self.data;
        let (a1, a2, a3) = (c.a1, c.a2, c.a3);
        if residue_big(&(&c.d0 * &c.q0), p) == 0 {
            return Err(Error::Hypothesis(format!("{p} divides D0*Q0")));
        }
        let f = PrimeField::new(p)?;
        let roots = count_roots(a1, a2, a3, p)?;
        let mut verdicts = BTreeMap::new();
        let mut skipped = BTreeMap::new();

        verdicts.insert(Statement::I, roots.count == 3);

        match &self.subgroup {
            Ok(g) => {
                let v = roots.legendre_d0 == 1 && {
                    let d1 = c.d1.to_i64().expect("subgroup exists, so D1 fits");
                    g.contains(&class_of_prime(p, d1)?)
                };
                verdicts.insert(Statement::II, v);
            }
            Err(reason) => {
                skipped.insert(Statement::II, reason.clone());
            }
        }

        let p_divides_p0 = residue_big(&c.p0, p) == 0;
        let big3 = BigInt::from(3);
        let p0_sq_minus_3q0 = &c.p0 * &c.p0 - &c.q0 * &big3;
        let p_divides_second = p_divides_p0 || residue_big(&p0_sq_minus_3q0, p) == 0;

        let a1sq: BigInt = BigInt::from(a1) * a1;
        let base: BigInt = &a1sq - BigInt::from(a2) * 3i32;

        let gated = |cond: bool, why: &str, s: Statement, skipped: &mut BTreeMap<Statement, String>| {
            if cond {
                skipped.insert(s, why.to_string());
            }
            !cond
        };

        if gated(p_divides_p0, "p divides P0", Statement::III, &mut skipped) {
            verdicts.insert(Statement::III, u_mod(a1, a2, a3, p - 2, p)? == 0);
        }

        if gated(p_divides_p0, "p divides P0", Statement::IV, &mut skipped) {
            let b2: BigInt = -(&base * &big3);
            let b3 = -c.p0.clone();
            verdicts.insert(Statement::IV, u_mod(0, b2, b3, p, p)? == 0);
        }

        let want_s = f.from_big(&(&a1sq - BigInt::from(a2) * 2));
        verdicts.insert(Statement::V, s_mod(a1, a2, a3, p + 1, p)? == want_s);

        let eps = legendre_p_3(p);
        let n = ((p as i64 - eps) / 3) as u64;
        let (u_n, v_n) = lucas_mod(c.p0.clone(), c.q0.clone(), n, p)?;
        if gated(p_divides_p0, "p divides P0", Statement::VI, &mut skipped) {
            verdicts.insert(Statement::VI, u_n == 0);
        }

        let want_v = f.mul(2, f.pow(f.from_big(&base), ((1 - eps) / 2) as u64));
        verdicts.insert(Statement::VII, v_n == want_v);

        let why = "p divides P0(P0^2-3Q0)";
        if gated(p_divides_second, why, Statement::VIIPrime, &mut skipped) {
            let k = p / 3;
            let (u, _) = lucas_mod(c.p0.clone(), c.q0.clone(), 2 * k + 1, p)?;
            let want = f.pow(f.neg(f.from_big(&c.q0)), k);
            verdicts.insert(Statement::VIIPrime, u == want);
        }
        if gated(p_divides_second, why, Statement::VIII, &mut skipped) {
            verdicts.insert(Statement::VIII, binomial_sum(c.p0.clone(), c.q0.clone(), p)? == 0);
        }

        if a1 != 0 {
            skipped.insert(Statement::IX, "a1 is nonzero".into());
        } else if gated(p_divides_p0, "p divides P0", Statement::IX, &mut skipped) {
            verdicts.insert(Statement::IX, u_mod(0, a2, a3, p, p)? == 0);
        }

        Ok(CriterionReport {
            p,
            cubic: (a1, a2, a3),
            applicable: verdicts.keys().copied().collect(),
            verdicts,
            skipped,
            legendre_d0: roots.legendre_d0,
            root_count: roots.count,
        })
    }
}

/// [`CubicCriteria::evaluate`] for a single prime.
pub fn evaluate_statements(a1: i64, a2: i64, a3: i64, p: u64) -> Result<CriterionReport> {
    CubicCriteria::new(a1, a2, a3)?.evaluate(p)
}

/// Whether `value` is a nonzero cube modulo a prime `p = 1 (mod 3)`.
pub fn cubic_residue_test(p: u64, value: i128) -> Result<bool> {
    if p % 3 != 1 || !arith::is_prime(p) {
        return Err(Error::Hypothesis(format!("{p} is not a prime of the form 3k+1")));
    }
    let v = residue_i128(value, p);
    if v == 0 {
        return Err(Error::Hypothesis(format!("{p} divides {value}")));
    }
    Ok(arith::pow_mod(v, (p - 1) / 3, p) == 1)
}

/// Whether `Q(P + sqrt(P^2 - Q))` is a cube mod `p`, with `Q = P^2 + 27D`.
pub fn surd_cubic_residue(pp: i64, d: i64, p: u64) -> Result<bool> {
    let (pp, d) = (pp as i128, d as i128);
    let q = pp * pp + 27 * d;
    if p % 3 != 1 || !arith::is_prime(p) {
        return Err(Error::Hypothesis(format!("{p} is not a prime of the form 3k+1")));
    }
    if residue_i128(q, p) == 0 {
        return Err(Error::Hypothesis(format!("{p} divides Q = {q}")));
    }
    let disc = -27 * d;
    if arith::jacobi(disc, p) != 1 {
        return Err(Error::Hypothesis(format!("P^2 - Q = {disc} is not a nonzero square mod {p}")));
    }
    let r = arith::sqrt_mod_p(disc, p)? as i128;
    let one = cubic_residue_test(p, q * (pp + r))?;
    let other = cubic_residue_test(p, q * (pp - r))?;
    assert_eq!(one, other, "choice of square root matters at P={pp} D={d} p={p}");
    Ok(one)
}

/// `(residue test, membership of p's class in g)` at `p`.
pub fn surd_sides(g: &Subgroup, p: u64) -> Result<(bool, bool)> {
    let pp = g
        .p
        .to_i64()
        .ok_or_else(|| Error::Hypothesis("P out of range".into()))?;
    let residue = surd_cubic_residue(pp, g.d, p)?;
    let member = g.contains(&class_of_prime(p, g.d)?);
    Ok((residue, member))
}

/// Both sides of the cubic-surd criterion agree at `p`.
pub fn surd_criterion_check(pp: i64, d: i64, p: u64) -> Result<bool> {
    let g = subgroup_g(pp, d)?;
    let (a, b) = surd_sides(&g, p)?;
    Ok(a == b)
}

impl CubicData {
    /// `a1^2 a2^2 - 4a2^3 - 4a1^3 a3 - 27a3^2 + 18 a1 a2 a3`.
    pub fn discriminant(a1: i64, a2: i64, a3: i64) -> BigInt {
        let (x1, x2, x3) = (BigInt::from(a1), BigInt::from(a2), BigInt::from(a3));
        &x1 * &x1 * &x2 * &x2 - &x2 * &x2 * &x2 * 4 - &x1 * &x1 * &x1 * &x3 * 4 - &x3 * &x3 * 27
            + &x1 * &x2 * &x3 * 18
    }
}

/// `true` when `p` is usable for the statements of this cubic.
pub fn admissible_prime(data: &CubicData, p: u64) -> bool {
    p > 3 && arith::is_prime(p) && !(&data.d0 * &data.q0).is_zero() && residue_big(&(&data.d0 * &data.q0), p) != 0
}
