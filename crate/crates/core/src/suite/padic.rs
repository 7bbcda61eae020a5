//! Classical p-adic claims: exact rational sums checked against prime-power
//! moduli. Terms are accumulated with incremental ratios; every denominator
//! in sight is a power of 2 or a p-free binomial, so the reduced differences
//! are p-integral by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::{self, Coefficient};
use crate::congruence::{padic_congruent, PadicModulus, Warning};
use crate::qkit::{central_binomial, euler_number};

use super::{Domain, Outcome, Statement, StatementKind, Variant, BOTH, NONE};

fn m_for(p: u64, variant: Option<Variant>) -> u64 {
    match variant.expect("statement has variants") {
        Variant::Half => (p - 1) / 2,
        Variant::Full => p - 1,
    }
}

/// (-1)^{(p-1)/2}
fn parity_sign(p: u64) -> Coefficient {
    coeff::sign((p - 1) / 2)
}

/// Σ_{k=0}^{m} (-1)^k (4k+1) ((1/2)_k/k!)³.
fn sum_alternating_4k1(m: u64) -> Coefficient {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let mut cube = BigRational::one(); // ((1/2)_k/k!)³
    for k in 0..=m {
        if k > 0 {
            let step = coeff::ratio(2 * k as i64 - 1, 2 * k as i64);
            cube *= coeff::pow(&step, 3);
        }
        let term = coeff::int(4 * k as i64 + 1) * coeff::sign(k) * &cube;
        acc += term;
    }
    acc
}

/// Σ_{k=0}^{upper} (-1)^k (3k+1) ((1/2)_k/k!)³ 2^{3k}.
fn sum_3k1_cubes(upper: u64) -> Coefficient {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let mut factor = BigRational::one(); // ((1/2)_k/k!)³ 8^k
    for k in 0..=upper {
        if k > 0 {
            let step = coeff::ratio(2 * k as i64 - 1, 2 * k as i64);
            factor *= coeff::pow(&step, 3) * coeff::int(8);
        }
        acc += coeff::int(3 * k as i64 + 1) * coeff::sign(k) * &factor;
    }
    acc
}

/// Σ_{k=0}^{p-1} C(2k,k)/2^k.
fn sum_central_over_2k(p: u64) -> Coefficient {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let mut term = BigRational::one(); // C(2k,k)/2^k
    for k in 0..p {
        if k > 0 {
            // C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k
            term *= coeff::ratio(2 * k as i64 - 1, k as i64);
        }
        acc += &term;
    }
    acc
}

/// Σ_{k=0}^{upper} C(2k,k)²/16^k.
fn sum_central_sq_over_16k(upper: u64) -> Coefficient {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let mut term = BigRational::one();
    for k in 0..=upper {
        if k > 0 {
            let r = coeff::ratio(2 * k as i64 - 1, k as i64);
            term *= &r * &r * coeff::ratio(1, 4);
        }
        acc += &term;
    }
    acc
}

/// Σ_{k=1}^{(p-1)/2} 4^k/(k(2k-1)C(2k,k)).
fn sum_inverse_central(p: u64) -> Coefficient {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let mut pow4 = BigInt::one();
    for k in 1..=(p - 1) / 2 {
        pow4 *= 4;
        let den = BigInt::from(k) * BigInt::from(2 * k - 1) * central_binomial(k);
        acc += BigRational::new(pow4.clone(), den);
    }
    acc
}

fn euler_term(p: u64) -> Coefficient {
    BigRational::from_integer(euler_number(p - 3).expect("p odd, p-3 even"))
}

fn check_p(p: u64, exponent: u32, lhs: Coefficient, rhs: Coefficient) -> Outcome {
    let m = PadicModulus::new(p, exponent).expect("domain guarantees a prime");
    match padic_congruent(&lhs, &rhs, &m) {
        Ok(holds) => Outcome {
            holds,
            modulus_degree: exponent as u64,
            warnings: Vec::new(),
        },
        // Denominator divisible by p: the claim is malformed rather than
        // false; report it as a failed record with the denominator flag.
        Err(_) => Outcome {
            holds: false,
            modulus_degree: exponent as u64,
            warnings: vec![Warning::NonCoprimeDenominator],
        },
    }
}

fn check_vanhamme(p: u64, v: Option<Variant>) -> Outcome {
    let lhs = sum_alternating_4k1(m_for(p, v));
    let rhs = coeff::int(p as i64) * parity_sign(p);
    check_p(p, 3, lhs, rhs)
}

fn check_sun_p4(p: u64, v: Option<Variant>) -> Outcome {
    let lhs = sum_alternating_4k1(m_for(p, v));
    let rhs = coeff::int(p as i64) * parity_sign(p)
        + coeff::int((p * p * p) as i64) * euler_term(p);
    check_p(p, 4, lhs, rhs)
}

fn check_gz_div3(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_3k1_cubes((p - 1) / 2);
    let rhs = coeff::int(p as i64) * parity_sign(p);
    check_p(p, 3, lhs, rhs)
}

fn check_cxh(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_3k1_cubes(p - 1);
    let rhs = coeff::int(p as i64) * parity_sign(p)
        + coeff::int((p * p * p) as i64) * euler_term(p);
    check_p(p, 4, lhs, rhs)
}

fn check_sun_3_1(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_inverse_central(p);
    let rhs = coeff::int(2) * euler_term(p);
    check_p(p, 1, lhs, rhs)
}

fn check_sun_combin(p: u64, v: Option<Variant>) -> Outcome {
    let lhs = sum_alternating_4k1(m_for(p, v));
    let rhs = sum_3k1_cubes(p - 1);
    check_p(p, 4, lhs, rhs)
}

fn check_sun_2(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_central_over_2k(p);
    let rhs = parity_sign(p) - coeff::int((p * p) as i64) * euler_term(p);
    check_p(p, 3, lhs, rhs)
}

fn check_sun_3(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_central_sq_over_16k((p - 1) / 2);
    let rhs = parity_sign(p) + coeff::int((p * p) as i64) * euler_term(p);
    check_p(p, 3, lhs, rhs)
}

fn check_sun_4(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_central_sq_over_16k(p - 1);
    let rhs = parity_sign(p) - coeff::int((p * p) as i64) * euler_term(p);
    check_p(p, 3, lhs, rhs)
}

fn check_sun2_4(p: u64, _v: Option<Variant>) -> Outcome {
    let lhs = sum_central_over_2k(p);
    let rhs = sum_central_sq_over_16k(p - 1);
    check_p(p, 3, lhs, rhs)
}

pub(super) fn statements() -> Vec<Statement> {
    vec![
        Statement {
            id: "cl-vanhamme",
            kind: StatementKind::Padic,
            description: "alternating (4k+1) central-binomial sum reduces to p(-1)^{(p-1)/2}",
            modulus_label: "p³",
            domain: Domain::Prime { min: 3 },
            variants: BOTH,
            check: check_vanhamme,
        },
        Statement {
            id: "cl-sun-p4",
            kind: StatementKind::Padic,
            description: "refinement with the p³E_{p-3} Euler term",
            modulus_label: "p⁴",
            domain: Domain::Prime { min: 5 },
            variants: BOTH,
            check: check_sun_p4,
        },
        Statement {
            id: "cl-gz-div3",
            kind: StatementKind::Padic,
            description: "alternating (3k+1)·8^k sum over k ≤ (p-1)/2 reduces to p(-1)^{(p-1)/2}",
            modulus_label: "p³",
            domain: Domain::Prime { min: 3 },
            variants: NONE,
            check: check_gz_div3,
        },
        Statement {
            id: "cl-cxh",
            kind: StatementKind::Padic,
            description: "full-range (3k+1)·8^k sum with the p³E_{p-3} refinement",
            modulus_label: "p⁴",
            domain: Domain::Prime { min: 5 },
            variants: NONE,
            check: check_cxh,
        },
        Statement {
            id: "cl-sun-3-1",
            kind: StatementKind::Padic,
            description: "Σ 4^k/(k(2k-1)C(2k,k)) over k ≤ (p-1)/2 reduces to 2E_{p-3}",
            modulus_label: "p",
            domain: Domain::Prime { min: 5 },
            variants: NONE,
            check: check_sun_3_1,
        },
        Statement {
            id: "cl-sun-combin",
            kind: StatementKind::Padic,
            description: "the (4k+1) and (3k+1)·8^k sums agree directly",
            modulus_label: "p⁴",
            domain: Domain::Prime { min: 5 },
            variants: BOTH,
            check: check_sun_combin,
        },
        Statement {
            id: "cl-sun-2",
            kind: StatementKind::Padic,
            description: "Σ C(2k,k)/2^k over k < p with the -p²E_{p-3} term",
            modulus_label: "p³",
            domain: Domain::Prime { min: 5 },
            variants: NONE,
            check: check_sun_2,
        },
        Statement {
            id: "cl-sun-3",
            kind: StatementKind::Padic,
            description: "Σ C(2k,k)²/16^k over k ≤ (p-1)/2 with the +p²E_{p-3} term",
            modulus_label: "p³",
            domain: Domain::Prime { min: 5 },
            variants: NONE,
            check: check_sun_3,
        },
        Statement {
            id: "cl-sun-4",
            kind: StatementKind::Padic,
            description: "Σ C(2k,k)²/16^k over k < p with the -p²E_{p-3} term",
            modulus_label: "p³",
            domain: Domain::Prime { min: 5 },
            variants: NONE,
            check: check_sun_4,
        },
        Statement {
            id: "cl-sun2-4",
            kind: StatementKind::Padic,
            description: "Σ C(2k,k)/2^k and Σ C(2k,k)²/16^k agree",
            modulus_label: "p³",
            domain: Domain::Prime { min: 3 },
            variants: NONE,
            check: check_sun2_4,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;

    #[test]
    fn pinned_sum_values_at_p5() {
        // Σ_{k=0}^{2} (-1)^k(4k+1)((1/2)_k/k!)³ = 1 - 5/8 + 9·27/512 = 435/512
        assert_eq!(sum_alternating_4k1(2), ratio(435, 512));
        // rhs 5 - 125 = -120; difference 61875/512 with 61875 = 5⁴·99
        let diff = sum_alternating_4k1(2) - coeff::int(-120);
        assert_eq!(diff, ratio(61875, 512));
    }

    #[test]
    fn sun_3_1_instance_p5() {
        // Σ_{k=1}^{2} 4^k/(k(2k-1)C(2k,k)) = 4/2 + 16/36 = 22/9
        assert_eq!(sum_inverse_central(5), ratio(22, 9));
        // ≡ 2E_2 = -2 (mod 5): 22/9 + 2 = 40/9
        assert!(check_sun_3_1(5, None).holds);
    }

    #[test]
    fn vanhamme_and_refinement_small_primes() {
        for p in [3u64, 5, 7, 11, 13] {
            for v in [Variant::Half, Variant::Full] {
                assert!(check_vanhamme(p, Some(v)).holds, "p={p} {v:?}");
            }
        }
        for p in [5u64, 7, 11, 13] {
            for v in [Variant::Half, Variant::Full] {
                assert!(check_sun_p4(p, Some(v)).holds, "p={p} {v:?}");
            }
        }
    }

    #[test]
    fn euler_statements_small_primes() {
        for p in [5u64, 7, 11, 13, 17] {
            assert!(check_gz_div3(p, None).holds, "div3 p={p}");
            assert!(check_cxh(p, None).holds, "cxh p={p}");
            assert!(check_sun_3_1(p, None).holds, "sun31 p={p}");
            assert!(check_sun_combin(p, Some(Variant::Half)).holds, "combin p={p}");
            assert!(check_sun_2(p, None).holds, "sun2 p={p}");
            assert!(check_sun_3(p, None).holds, "sun3 p={p}");
            assert!(check_sun_4(p, None).holds, "sun4 p={p}");
            assert!(check_sun2_4(p, None).holds, "sun24 p={p}");
        }
    }
}
