//! Divisibility pre-checks modulo a machine-word prime.
//!
//! Exact bignum division of large polynomials is the hot path of congruence
//! checking. Reducing both operands mod a fixed prime and dividing with u64
//! arithmetic gives a cheap certificate of *non*-divisibility: the divisors
//! used here are primitive integer polynomials, so exact divisibility over Q
//! implies divisibility of the images (Gauss), and a nonzero mod-p remainder
//! rules the exact division out without touching bignums.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::poly::{Exp, MPoly};

// 2^61 - 1 (Mersenne) and the largest prime below 2^62.
const PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = (n.abs() % BigInt::from(p)).to_u64().expect("fits u64");
    if n.is_negative() && m != 0 {
        p - m
    } else {
        m
    }
}

/// Image of a rational-coefficient polynomial in Z_p[q,a,b]. `None` when some
/// coefficient denominator vanishes mod p.
fn project(poly: &MPoly, p: u64) -> Option<Vec<(Exp, u64)>> {
    let mut terms = Vec::with_capacity(poly.terms().len());
    for (e, c) in poly.terms() {
        let den = bigint_mod(c.denom(), p);
        if den == 0 {
            return None;
        }
        let num = bigint_mod(c.numer(), p);
        let v = mul_mod(num, inv_mod(den, p), p);
        if v != 0 {
            terms.push((*e, v));
        }
    }
    Some(terms)
}

fn univariate_q(terms: &[(Exp, u64)]) -> bool {
    terms.iter().all(|(e, _)| e.a == 0 && e.b == 0)
}

/// Dense single-pass division over Z_p for the univariate case.
fn divides_image_dense_q(num: &[(Exp, u64)], den: &[(Exp, u64)], p: u64) -> bool {
    let da = num.last().expect("nonzero").0.q as usize;
    let db = den.last().expect("nonzero").0.q as usize;
    if da < db {
        return false;
    }
    let mut rem = vec![0u64; da + 1];
    for (e, c) in num {
        rem[e.q as usize] = *c;
    }
    let mut div = vec![0u64; db + 1];
    for (e, c) in den {
        div[e.q as usize] = *c;
    }
    let lead_inv = inv_mod(div[db], p);
    for i in (db..=da).rev() {
        if rem[i] == 0 {
            continue;
        }
        let c = mul_mod(rem[i], lead_inv, p);
        let off = i - db;
        for (j, bj) in div.iter().enumerate().take(db) {
            if *bj != 0 {
                let delta = mul_mod(c, *bj, p);
                rem[off + j] = (rem[off + j] + p - delta) % p;
            }
        }
    }
    rem[..db].iter().all(|c| *c == 0)
}

fn divides_image(num: &[(Exp, u64)], den: &[(Exp, u64)], p: u64) -> bool {
    if den.is_empty() {
        // Divisor vanished mod p entirely; inconclusive, treat as "maybe".
        return true;
    }
    if num.is_empty() {
        return true;
    }
    if univariate_q(num) && univariate_q(den) {
        return divides_image_dense_q(num, den, p);
    }
    let (lead_exp, lead_coef) = den.last().expect("nonempty");
    let lead_inv = inv_mod(*lead_coef, p);
    let mut rem: BTreeMap<Exp, u64> = num.iter().cloned().collect();
    while let Some((&r_exp, _)) = rem.iter().next_back() {
        let r_coef = rem.remove(&r_exp).expect("leading term");
        let t_exp = Exp {
            q: match r_exp.q.checked_sub(lead_exp.q) {
                Some(v) => v,
                None => return false,
            },
            a: match r_exp.a.checked_sub(lead_exp.a) {
                Some(v) => v,
                None => return false,
            },
            b: match r_exp.b.checked_sub(lead_exp.b) {
                Some(v) => v,
                None => return false,
            },
        };
        let t_coef = mul_mod(r_coef, lead_inv, p);
        for (e, c) in den.iter().rev().skip(1) {
            let target = Exp {
                q: e.q + t_exp.q,
                a: e.a + t_exp.a,
                b: e.b + t_exp.b,
            };
            let delta = mul_mod(*c, t_coef, p);
            let entry = rem.entry(target).or_insert(0);
            *entry = (*entry + p - delta) % p;
            if *entry == 0 {
                rem.remove(&target);
            }
        }
    }
    true
}

/// Fast certificate: `false` means `den` certainly does not divide `num` over
/// the rationals (given `den` primitive with integer coefficients); `true`
/// means the exact division may succeed and must be confirmed.
pub(crate) fn may_divide(num: &MPoly, den: &MPoly) -> bool {
    if num.is_zero() {
        return true;
    }
    if num.total_degree() < den.total_degree() {
        return false;
    }
    for p in PRIMES {
        match (project(num, p), project(den, p)) {
            (Some(n), Some(d)) => return divides_image(&n, &d, p),
            _ => continue,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn qp(pairs: &[(u32, i64)]) -> MPoly {
        MPoly::from_terms(pairs.iter().map(|&(e, c)| (Exp::new(e, 0, 0), int(c))))
    }

    #[test]
    fn detects_divisible_and_not() {
        let phi6 = qp(&[(0, 1), (1, -1), (2, 1)]);
        let q6 = qp(&[(0, -1), (6, 1)]);
        assert!(may_divide(&q6, &phi6));
        let q5 = qp(&[(0, -1), (5, 1)]);
        assert!(!may_divide(&q5, &phi6));
        // degree short-circuit
        assert!(!may_divide(&phi6, &q6));
    }
}
