//! q-combinatorial and classical combinatorial building blocks:
//! q-integers, q-Pochhammer products over signed-monomial bases, Gaussian
//! binomial coefficients, Euler numbers (secant convention), rising-factorial
//! ratios and central binomial coefficients.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::coeff::{self, Coefficient};
use crate::error::QkitError;
use crate::poly::{Exp, MPoly};

/// A monomial ±q^{e_q} a^{e_a} b^{e_b}: the only Pochhammer bases the
/// statement formulas need at the polynomial layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub e_q: u32,
    pub e_a: u16,
    pub e_b: u16,
}

impl SignedMonomial {
    pub fn q_pow(e_q: u32) -> Self {
        SignedMonomial {
            negative: false,
            e_q,
            e_a: 0,
            e_b: 0,
        }
    }

    pub fn neg_q_pow(e_q: u32) -> Self {
        SignedMonomial {
            negative: true,
            e_q,
            e_a: 0,
            e_b: 0,
        }
    }

    /// a·q^{e_q}
    pub fn a_q_pow(e_q: u32) -> Self {
        SignedMonomial {
            negative: false,
            e_q,
            e_a: 1,
            e_b: 0,
        }
    }

    /// b·q^{e_q}
    pub fn b_q_pow(e_q: u32) -> Self {
        SignedMonomial {
            negative: false,
            e_q,
            e_a: 0,
            e_b: 1,
        }
    }

    pub fn to_poly(&self) -> MPoly {
        let c = if self.negative {
            -Coefficient::one()
        } else {
            Coefficient::one()
        };
        MPoly::term(Exp::new(self.e_q, self.e_a, self.e_b), c)
    }

    /// The monomial multiplied by q^e.
    fn shifted(&self, e: u32) -> SignedMonomial {
        SignedMonomial {
            e_q: self.e_q + e,
            ..*self
        }
    }
}

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
pub fn q_integer(n: u32) -> MPoly {
    MPoly::from_terms((0..n).map(|e| (Exp::new(e, 0, 0), Coefficient::one())))
}

/// ∏_{j=0}^{count-1} (1 - base·q^{j·step}). The empty product is 1.
pub fn q_pochhammer(base: SignedMonomial, step_exponent: u32, count: i64) -> MPoly {
    assert!(step_exponent >= 1, "step exponent must be positive");
    assert!(count >= 0, "negative Pochhammer counts live in wzengine");
    let mut acc = MPoly::one();
    for j in 0..count as u32 {
        let factor = MPoly::one().sub(&base.shifted(j * step_exponent).to_poly());
        acc = acc.mul(&factor);
    }
    acc
}

/// Gaussian binomial coefficient in base q^step: zero unless 0 <= N <= M,
/// otherwise (q^s;q^s)_M / ((q^s;q^s)_N (q^s;q^s)_{M-N}).
///
/// Built by the interleaved product ∏_{i=1}^{N} (1 - q^{s(M-N+i)})/(1 - q^{si});
/// every partial product is itself a Gaussian binomial, so each division is
/// exact (a failure would be a bug, not an input condition).
pub fn q_binomial(m: i64, n: i64, step_exponent: u32) -> MPoly {
    assert!(step_exponent >= 1, "step exponent must be positive");
    if n < 0 || n > m {
        return MPoly::zero();
    }
    let s = step_exponent;
    let n = n.min(m - n) as u32; // symmetry: fewer factors
    let m = m as u32;
    let mut acc = MPoly::one();
    for i in 1..=n {
        let num = MPoly::one().sub(&MPoly::q_pow(s * (m - n + i)));
        let den = MPoly::one().sub(&MPoly::q_pow(s * i));
        acc = acc
            .mul(&num)
            .exact_div(&den)
            .expect("Gaussian binomial partial product is a polynomial");
    }
    acc
}

static EULER_TABLE: Lazy<RwLock<Vec<BigInt>>> = Lazy::new(|| RwLock::new(vec![BigInt::one()]));

/// E_m for even m under the secant-number convention:
/// E_0 = 1 and Σ_{j=0}^{m/2} C(m,2j)·E_{2j} = 0 for even m >= 2.
/// Odd indices are an error (they are zero by convention; the table refuses
/// rather than guesses).
pub fn euler_number(m: u64) -> Result<BigInt, QkitError> {
    if m % 2 != 0 {
        return Err(QkitError::OddIndex(m));
    }
    let idx = (m / 2) as usize;
    {
        let table = EULER_TABLE.read().expect("euler table poisoned");
        if let Some(v) = table.get(idx) {
            return Ok(v.clone());
        }
    }
    let mut table = EULER_TABLE.write().expect("euler table poisoned");
    while table.len() <= idx {
        let k = table.len(); // computing E_{2k}
        let m = 2 * k as u64;
        let mut acc = BigInt::zero();
        for (j, e2j) in table.iter().enumerate() {
            acc += binomial(m, 2 * j as u64) * e2j;
        }
        table.push(-acc);
    }
    Ok(table[idx].clone())
}

/// C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(2k, k).
pub fn central_binomial(k: u64) -> BigInt {
    binomial(2 * k, k)
}

/// (1/2)_k / k! as an exact rational; the classical sums cube or square it.
pub fn rising_half_cubed_ratio(k: u64) -> Coefficient {
    let mut acc = Coefficient::one();
    for j in 1..=k {
        acc *= coeff::ratio(2 * j as i64 - 1, 2 * j as i64);
    }
    acc
}
