//! Cyclotomic polynomials and factorizations of 1 ± q^m into them.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use crate::poly::MPoly;

static CACHE: Lazy<RwLock<HashMap<u32, Arc<MPoly>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Divisors of n in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The n-th cyclotomic polynomial Φ_n(q), computed by exact division of
/// q^n - 1 by the Φ_d for proper divisors d. Values are cached; the cache
/// supports concurrent reads and recompute-on-miss insertion is idempotent
/// (any two computations of Φ_n produce the identical polynomial).
pub fn cyclotomic(n: u32) -> Arc<MPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(hit) = CACHE.read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(hit);
    }
    let mut quotient = q_pow_minus_one(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d);
        quotient = quotient
            .exact_div(&phi_d)
            .expect("cyclotomic recursion divides exactly");
    }
    let value = Arc::new(quotient);
    let mut w = CACHE.write().expect("cyclotomic cache poisoned");
    Arc::clone(w.entry(n).or_insert(value))
}

/// q^n - 1.
pub fn q_pow_minus_one(n: u32) -> MPoly {
    MPoly::q_pow(n).sub(&MPoly::one())
}

/// Indices d with (1 - q^m) = -∏ Φ_d, i.e. the divisors of m.
pub fn one_minus_q_pow_factors(m: u32) -> Vec<u32> {
    divisors(m)
}

/// Indices d with (1 + q^m) = ∏ Φ_d: divisors of 2m that do not divide m.
pub fn one_plus_q_pow_factors(m: u32) -> Vec<u32> {
    divisors(2 * m).into_iter().filter(|d| m % d != 0).collect()
}
