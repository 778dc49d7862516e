// SPDX-License-Identifier: Apache-2.0

//! The recurrences `u_n(a1,a2,a3)`, `s_n(a1,a2,a3)` and the Lucas pair
//! `U_n(b,c)`, `V_n(b,c)`, modulo a prime by matrix powers and exactly by
//! iteration.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::PrimeField;
use crate::{Error, Result};

type M3 = [[u64; 3]; 3];
type M2 = [[u64; 2]; 2];

fn mul3(f: &PrimeField, x: &M3, y: &M3) -> M3 {
    let mut z = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0;
            for k in 0..3 {
                acc = f.add(acc, f.mul(x[i][k], y[k][j]));
            }
            z[i][j] = acc;
        }
    }
    z
}

fn pow3(f: &PrimeField, mut m: M3, mut e: u64) -> M3 {
    let mut acc = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul3(f, &acc, &m);
        }
        m = mul3(f, &m, &m);
        e >>= 1;
    }
    acc
}

fn mul2(f: &PrimeField, x: &M2, y: &M2) -> M2 {
    let mut z = [[0u64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = f.add(f.mul(x[i][0], y[0][j]), f.mul(x[i][1], y[1][j]));
        }
    }
    z
}

fn pow2(f: &PrimeField, mut m: M2, mut e: u64) -> M2 {
    let mut acc = [[1, 0], [0, 1]];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul2(f, &acc, &m);
        }
        m = mul2(f, &m, &m);
        e >>= 1;
    }
    acc
}

fn companion(f: &PrimeField, a1: &BigInt, a2: &BigInt, a3: &BigInt) -> M3 {
    let n = |x: &BigInt| f.neg(f.from_big(x));
    [[n(a1), n(a2), n(a3)], [1, 0, 0], [0, 1, 0]]
}

/// `u_n(a1,a2,a3) mod p`, with `u_{-2} = u_{-1} = 0`, `u_0 = 1`.
pub fn u_mod(a1: impl Into<BigInt>, a2: impl Into<BigInt>, a3: impl Into<BigInt>, n: u64, p: u64) -> Result<u64> {
    let f = PrimeField::new(p)?;
    let m = companion(&f, &a1.into(), &a2.into(), &a3.into());
    Ok(pow3(&f, m, n)[0][0])
}

/// `s_n(a1,a2,a3) mod p`, the power sums of the roots.
pub fn s_mod(a1: impl Into<BigInt>, a2: impl Into<BigInt>, a3: impl Into<BigInt>, n: u64, p: u64) -> Result<u64> {
    let f = PrimeField::new(p)?;
    let (a1, a2, a3) = (a1.into(), a2.into(), a3.into());
    let init = s_initial(&a1, &a2).map(|x| f.from_big(&x));
    if n < 3 {
        return Ok(init[2 - n as usize]);
    }
    let m = pow3(&f, companion(&f, &a1, &a2, &a3), n - 2);
    let mut acc = 0;
    for (k, v) in init.iter().enumerate() {
        acc = f.add(acc, f.mul(m[0][k], *v));
    }
    Ok(acc)
}

/// `(s_2, s_1, s_0)`.
fn s_initial(a1: &BigInt, a2: &BigInt) -> [BigInt; 3] {
    [a1 * a1 - a2 * 2, -a1.clone(), BigInt::from(3)]
}

/// `(U_n(b,c) mod p, V_n(b,c) mod p)`.
pub fn lucas_mod(b: impl Into<BigInt>, c: impl Into<BigInt>, n: u64, p: u64) -> Result<(u64, u64)> {
    let f = PrimeField::new(p)?;
    let (b, c) = (f.from_big(&b.into()), f.from_big(&c.into()));
    let m = pow2(&f, [[b, f.neg(c)], [1, 0]], n);
    let (u_next, u) = (m[0][0], m[1][0]);
    Ok((u, f.sub(f.add(u_next, u_next), f.mul(b, u))))
}

/// `sum_{k=1}^{[p/3]} C(3k,k) r^k mod p` with `r = P0^2 / (27 Q0)`.
pub fn binomial_sum(p0: impl Into<BigInt>, q0: impl Into<BigInt>, p: u64) -> Result<u64> {
    let f = PrimeField::new(p)?;
    let den = f.mul(27 % p, f.from_big(&q0.into()));
    let inv = f
        .inv(den)
        .ok_or_else(|| Error::Hypothesis(format!("{p} divides 27*Q0")))?;
    let pp = f.from_big(&p0.into());
    let r = f.mul(f.mul(pp, pp), inv);
    let mut binom = 1u64;
    let mut rk = 1u64;
    let mut sum = 0u64;
    for k in 0..p / 3 {
        // C(3k+3, k+1) = C(3k,k) (3k+1)(3k+2)(3k+3) / ((k+1)(2k+1)(2k+2))
        let num = f.mul(f.mul(3 * k + 1, 3 * k + 2), 3 * k + 3);
        let den = f.mul(f.mul(k + 1, 2 * k + 1), 2 * k + 2);
        binom = f.mul(binom, f.mul(num, f.inv(den).expect("factors below p")));
        rk = f.mul(rk, r);
        sum = f.add(sum, f.mul(binom, rk));
    }
    Ok(sum)
}

/// `u_0, ..., u_n` over the integers.
pub fn u_exact(a1: i64, a2: i64, a3: i64, n: usize) -> Vec<BigInt> {
    let (a1, a2, a3) = (BigInt::from(a1), BigInt::from(a2), BigInt::from(a3));
    let mut v = vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)];
    for i in 3..n + 3 {
        let next = -(&a1 * &v[i - 1] + &a2 * &v[i - 2] + &a3 * &v[i - 3]);
        v.push(next);
    }
    v.split_off(2)
}

/// `s_0, ..., s_n` over the integers.
pub fn s_exact(a1: i64, a2: i64, a3: i64, n: usize) -> Vec<BigInt> {
    let (a1, a2, a3) = (BigInt::from(a1), BigInt::from(a2), BigInt::from(a3));
    let [s2, s1, s0] = s_initial(&a1, &a2);
    let mut v = vec![s0, s1, s2];
    for i in 3..=n {
        let next = -(&a1 * &v[i - 1] + &a2 * &v[i - 2] + &a3 * &v[i - 3]);
        v.push(next);
    }
    v.truncate(n + 1);
    v
}

/// `(U_k, V_k)` for `k = 0..=n` over the integers.
pub fn lucas_exact(b: i64, c: i64, n: usize) -> Vec<(BigInt, BigInt)> {
    let (b, c) = (BigInt::from(b), BigInt::from(c));
    let mut u = vec![BigInt::from(0), BigInt::from(1)];
    let mut v = vec![BigInt::from(2), b.clone()];
    for k in 2..=n {
        u.push(&b * &u[k - 1] - &c * &u[k - 2]);
        v.push(&b * &v[k - 1] - &c * &v[k - 2]);
    }
    u.into_iter().zip(v).take(n + 1).collect()
}

/// One of the four sequences with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recurrence {
    U { a1: i64, a2: i64, a3: i64 },
    S { a1: i64, a2: i64, a3: i64 },
    LucasU { b: i64, c: i64 },
    LucasV { b: i64, c: i64 },
}

impl Recurrence {
    pub fn eval_mod(&self, n: u64, p: u64) -> Result<u64> {
        match *self {
            Recurrence::U { a1, a2, a3 } => u_mod(a1, a2, a3, n, p),
            Recurrence::S { a1, a2, a3 } => s_mod(a1, a2, a3, n, p),
            Recurrence::LucasU { b, c } => lucas_mod(b, c, n, p).map(|x| x.0),
            Recurrence::LucasV { b, c } => lucas_mod(b, c, n, p).map(|x| x.1),
        }
    }

    /// Terms `0..=n`, by plain iteration.
    pub fn exact_terms(&self, n: usize) -> Vec<BigInt> {
        match *self {
            Recurrence::U { a1, a2, a3 } => u_exact(a1, a2, a3, n),
            Recurrence::S { a1, a2, a3 } => s_exact(a1, a2, a3, n),
            Recurrence::LucasU { b, c } => lucas_exact(b, c, n).into_iter().map(|x| x.0).collect(),
            Recurrence::LucasV { b, c } => lucas_exact(b, c, n).into_iter().map(|x| x.1).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{primes_between, residue_big};
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(u_exact(0, -1, 2, 3)[3], BigInt::from(-2));
        assert_eq!(u_mod(0, -1, 2, 3, 101).unwrap(), 99);
        assert_eq!(s_exact(0, -1, 2, 3)[3], BigInt::from(-6));
        assert_eq!(s_mod(0, -1, 2, 3, 101).unwrap(), 95);
        assert_eq!(s_mod(4, 5, 6, 0, 7).unwrap(), 3);
        let l = lucas_exact(18, 3, 3);
        assert_eq!(l[3].0, BigInt::from(321));
        assert_eq!(l[2].1, BigInt::from(318));
        assert_eq!(lucas_exact(-54, 27, 3)[3].0, BigInt::from(2889));
        assert_eq!(lucas_mod(5, 7, 0, 13).unwrap(), (0, 2));
        assert_eq!(lucas_mod(18, 3, 3, 1009).unwrap(), (321, 5670 % 1009));
    }

    #[test]
    fn u2_and_u3_closed_forms() {
        for (a1, a2, a3) in [(3, -7, 11), (-5, 2, 9), (0, 4, -1)] {
            let u = u_exact(a1, a2, a3, 3);
            assert_eq!(u[2], BigInt::from(a1 * a1 - a2));
            assert_eq!(u[3], BigInt::from(-a1 * a1 * a1 + 2 * a1 * a2 - a3));
        }
    }

    #[test]
    fn criteria_at_31() {
        assert_eq!(u_mod(0, -1, 2, 29, 31).unwrap(), 0);
        assert_eq!(s_mod(0, -1, 2, 32, 31).unwrap(), 2);
    }

    #[test]
    fn binomial_sum_examples() {
        assert_eq!(binomial_sum(-54, 27, 11).unwrap(), 7);
        assert_eq!(binomial_sum(-54, 27, 31).unwrap(), 0);
        assert_eq!(binomial_sum(0, 5, 13).unwrap(), 0);
        assert!(binomial_sum(1, 13, 13).is_err());
    }

    #[test]
    fn binomial_sum_matches_factorials() {
        for p in primes_between(5, 200) {
            for (pp, qq) in [(-54i64, 27i64), (-79, 1), (7, -8)] {
                let Ok(got) = binomial_sum(pp, qq, p) else { continue };
                let f = PrimeField::new(p).unwrap();
                let fact: Vec<u64> = (0..p).scan(1u64, |a, i| {
                    let v = *a;
                    *a = f.mul(*a, i + 1);
                    Some(v)
                }).collect();
                let r = f.mul(f.mul(f.from_i64(pp), f.from_i64(pp)), f.inv(f.mul(27, f.from_i64(qq))).unwrap());
                let mut want = 0;
                for k in 1..=p / 3 {
                    let k = k as usize;
                    let c = f.mul(fact[3 * k], f.inv(f.mul(fact[k], fact[2 * k])).unwrap());
                    want = f.add(want, f.mul(c, f.pow(r, k as u64)));
                }
                assert_eq!(got, want, "p={p}");
            }
        }
    }

    #[test]
    fn lucas_scaling_identity() {
        let a = lucas_exact(-54, 27, 50);
        let b = lucas_exact(18, 3, 50);
        for n in 1..=50usize {
            assert_eq!(a[n].0, BigInt::from(-3).pow(n as u32 - 1) * &b[n].0);
        }
    }

    #[test]
    fn power_sums_by_newton() {
        for (a1, a2, a3) in [(0, -1, 2), (2, 1, 3), (-3, 0, 1), (1, 1, 1)] {
            // e1 = -a1, e2 = a2, e3 = -a3
            let (e1, e2, e3) = (BigInt::from(-a1), BigInt::from(a2), BigInt::from(-a3));
            let s = s_exact(a1, a2, a3, 20);
            let mut p = vec![BigInt::from(3), e1.clone()];
            p.push(&e1 * &p[1] - &e2 * 2);
            for k in 3..=20 {
                p.push(&e1 * &p[k - 1] - &e2 * &p[k - 2] + &e3 * &p[k - 3]);
            }
            assert_eq!(s, p);
        }
    }

    proptest! {
        #[test]
        fn matrix_powers_match_iteration(
            a1 in -20i64..20, a2 in -20i64..20, a3 in -20i64..20,
            pi in 0usize..23,
        ) {
            let p = primes_between(3, 100)[pi];
            for spec in [
                Recurrence::U { a1, a2, a3 },
                Recurrence::S { a1, a2, a3 },
                Recurrence::LucasU { b: a1, c: a2 },
                Recurrence::LucasV { b: a1, c: a2 },
            ] {
                let exact = spec.exact_terms(200);
                for (n, x) in exact.iter().enumerate() {
                    prop_assert_eq!(spec.eval_mod(n as u64, p).unwrap(), residue_big(x, p));
                }
            }
        }
    }
}
