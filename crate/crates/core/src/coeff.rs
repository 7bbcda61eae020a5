//! Exact rational coefficients.
//!
//! `Coefficient` is `num_rational::BigRational`, which already maintains the
//! invariants the ring needs: numerator and denominator coprime, denominator
//! positive, zero represented as 0/1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Coefficient = BigRational;

/// Integer coefficient.
pub fn int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational coefficient `n/d`.
pub fn ratio(n: i64, d: i64) -> Coefficient {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for a nonnegative exponent.
pub fn pow(base: &Coefficient, exp: u32) -> Coefficient {
    if exp == 0 {
        return Coefficient::one();
    }
    BigRational::new_raw(base.numer().pow(exp), base.denom().pow(exp))
}

/// (-1)^k as a coefficient.
pub fn sign(k: u64) -> Coefficient {
    if k % 2 == 0 {
        Coefficient::one()
    } else {
        -Coefficient::one()
    }
}

/// Exact p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = n.abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}
