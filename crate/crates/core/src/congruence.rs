//! The congruence predicate for rational functions modulo polynomial moduli,
//! plus prime-power congruences for exact rationals.
//!
//! A(q) ≡ B(q) (mod P(q)) means: P divides the numerator of the reduced form
//! of A - B. When the reduced denominator is not coprime to P the congruence
//! is still evaluated as defined, but a warning is attached, since the
//! denominator is then not invertible modulo P.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::cyclotomic::{cyclotomic, divisors, is_prime};
use crate::error::CongruenceError;
use crate::gcd::poly_gcd;
use crate::poly::{Exp, MPoly};
use crate::ratfunc::RatFunc;
use crate::zp::may_divide;

/// The modulus shapes the statements use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusKind {
    /// Φ_n(q)
    Phi1,
    /// Φ_n(q)^2
    Phi2,
    /// Φ_n(q)^3
    Phi3,
    /// Φ_n(q)^4
    Phi4,
    /// [n]·Φ_n(q)^2
    NPhi2,
    /// [n]·Φ_n(q)^3
    NPhi3,
    /// [n]
    NOnly,
    /// [n]·Φ_n(q)·(1-aq^n)(a-q^n)
    ParamA,
}

impl ModulusKind {
    pub fn label(self) -> &'static str {
        match self {
            ModulusKind::Phi1 => "Φ_n(q)",
            ModulusKind::Phi2 => "Φ_n(q)²",
            ModulusKind::Phi3 => "Φ_n(q)³",
            ModulusKind::Phi4 => "Φ_n(q)⁴",
            ModulusKind::NPhi2 => "[n]·Φ_n(q)²",
            ModulusKind::NPhi3 => "[n]·Φ_n(q)³",
            ModulusKind::NOnly => "[n]",
            ModulusKind::ParamA => "[n]·Φ_n(q)·(1-aqⁿ)(a-qⁿ)",
        }
    }
}

/// A polynomial modulus, kept factored into irreducibles.
#[derive(Debug, Clone)]
pub struct Modulus {
    poly: MPoly,
    factors: Vec<(MPoly, u32)>,
    description: String,
}

impl Modulus {
    /// Directly from irreducible factors (each normalized primitive).
    fn from_factors(factors: Vec<(MPoly, u32)>, description: String) -> Self {
        let mut poly = MPoly::one();
        for (f, m) in &factors {
            for _ in 0..*m {
                poly = poly.mul(f);
            }
        }
        Modulus {
            poly,
            factors,
            description,
        }
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn degree(&self) -> u64 {
        self.poly.total_degree()
    }

    pub(crate) fn factors(&self) -> &[(MPoly, u32)] {
        &self.factors
    }

    /// True when the modulus divides the polynomial exactly, dividing factor
    /// by factor with a mod-p pre-check.
    pub(crate) fn divides(&self, poly: &MPoly) -> bool {
        if poly.is_zero() {
            return true;
        }
        let mut rest = poly.clone();
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                if !may_divide(&rest, f) {
                    return false;
                }
                match rest.exact_div(f) {
                    Ok(q) => rest = q,
                    Err(_) => return false,
                }
            }
        }
        true
    }
}

/// Builds the modulus of the given kind for odd n. For n = 1 every kind
/// degenerates to [1] = 1 and the congruence is vacuous; callers record a
/// TrivialModulus warning instead of checking anything.
pub fn modulus_build(kind: ModulusKind, n: u32) -> Result<Modulus, CongruenceError> {
    assert!(n % 2 == 1, "modulus index must be odd");
    if n == 1 {
        return Err(CongruenceError::TrivialModulus);
    }
    let phi_n = cyclotomic(n).as_ref().clone();
    let mut factors: Vec<(MPoly, u32)> = Vec::new();
    let mut push = |f: MPoly, m: u32| {
        if let Some(slot) = factors.iter_mut().find(|(g, _)| *g == f) {
            slot.1 += m;
        } else {
            factors.push((f, m));
        }
    };
    let push_q_int = |push: &mut dyn FnMut(MPoly, u32)| {
        for d in divisors(n) {
            if d > 1 {
                push(cyclotomic(d).as_ref().clone(), 1);
            }
        }
    };
    match kind {
        ModulusKind::Phi1 => push(phi_n, 1),
        ModulusKind::Phi2 => push(phi_n, 2),
        ModulusKind::Phi3 => push(phi_n, 3),
        ModulusKind::Phi4 => push(phi_n, 4),
        ModulusKind::NOnly => push_q_int(&mut push),
        ModulusKind::NPhi2 => {
            push_q_int(&mut push);
            push(phi_n, 2);
        }
        ModulusKind::NPhi3 => {
            push_q_int(&mut push);
            push(phi_n, 3);
        }
        ModulusKind::ParamA => {
            push_q_int(&mut push);
            push(phi_n, 1);
            // (1-aq^n) and (a-q^n), normalized to positive leading
            // coefficients; the two sign flips cancel in the product.
            let aqn_minus_1 = MPoly::from_terms([
                (Exp::new(n, 1, 0), crate::coeff::int(1)),
                (Exp::ZERO, crate::coeff::int(-1)),
            ]);
            let qn_minus_a = MPoly::from_terms([
                (Exp::new(n, 0, 0), crate::coeff::int(1)),
                (Exp::new(0, 1, 0), crate::coeff::int(-1)),
            ]);
            push(aqn_minus_1, 1);
            push(qn_minus_a, 1);
        }
    }
    let description = match kind {
        ModulusKind::Phi1 => format!("Φ_{n}(q)"),
        ModulusKind::Phi2 => format!("Φ_{n}(q)²"),
        ModulusKind::Phi3 => format!("Φ_{n}(q)³"),
        ModulusKind::Phi4 => format!("Φ_{n}(q)⁴"),
        ModulusKind::NOnly => format!("[{n}]"),
        ModulusKind::NPhi2 => format!("[{n}]·Φ_{n}(q)²"),
        ModulusKind::NPhi3 => format!("[{n}]·Φ_{n}(q)³"),
        ModulusKind::ParamA => format!("[{n}]·Φ_{n}(q)·(1-aq^{n})(a-q^{n})"),
    };
    Ok(Modulus::from_factors(factors, description))
}

/// Warnings a congruence check can attach without failing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Warning {
    /// n = 1: the modulus is the unit polynomial and everything is congruent.
    TrivialModulus,
    /// The reduced difference has a denominator sharing a factor with the
    /// modulus; the congruence is evaluated as defined but the denominator is
    /// not invertible modulo the modulus.
    NonCoprimeDenominator,
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::TrivialModulus => write!(f, "TrivialModulus"),
            Warning::NonCoprimeDenominator => write!(f, "NonCoprimeDenominator"),
        }
    }
}

/// Outcome of a congruence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceOutcome {
    pub holds: bool,
    pub warnings: Vec<Warning>,
}

/// Tests A ≡ B (mod M): forms the reduced difference and checks that the
/// modulus divides its numerator. A non-coprime denominator yields a warning,
/// not a failure.
pub fn congruent_mod(a: &RatFunc, b: &RatFunc, m: &Modulus) -> CongruenceOutcome {
    let diff = a.sub(b);
    if diff.is_zero() {
        return CongruenceOutcome {
            holds: true,
            warnings: Vec::new(),
        };
    }
    let holds = m.divides(diff.num());
    let mut warnings = Vec::new();
    if !denominator_coprime(&diff, m) {
        warnings.push(Warning::NonCoprimeDenominator);
    }
    CongruenceOutcome { holds, warnings }
}

fn denominator_coprime(diff: &RatFunc, m: &Modulus) -> bool {
    for (den_factor, _, irreducible) in diff.den_factors().iter() {
        for (mod_factor, _) in m.factors() {
            if irreducible {
                // Distinct normalized irreducibles are coprime.
                if den_factor == mod_factor {
                    return false;
                }
            } else if !poly_gcd(den_factor, mod_factor).is_constant() {
                return false;
            }
        }
    }
    true
}

/// A prime-power modulus p^e.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicModulus {
    p: u64,
    exponent: u32,
}

impl PadicModulus {
    pub fn new(p: u64, exponent: u32) -> Result<Self, CongruenceError> {
        if !is_prime(p) {
            return Err(CongruenceError::NotPrime(p));
        }
        assert!(exponent >= 1);
        Ok(PadicModulus { p, exponent })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

/// x ≡ y (mod p^e) for exact rationals: p^e divides the numerator of the
/// reduced difference, whose denominator must be coprime to p.
pub fn padic_congruent(
    x: &Coefficient,
    y: &Coefficient,
    m: &PadicModulus,
) -> Result<bool, CongruenceError> {
    let d = x - y;
    if d.is_zero() {
        return Ok(true);
    }
    let p = BigInt::from(m.p);
    if d.denom().mod_floor(&p).is_zero() {
        return Err(CongruenceError::NonInvertibleDenominator);
    }
    let pe = p.pow(m.exponent);
    Ok(d.numer().mod_floor(&pe).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ratio};
    use crate::qkit::{q_pochhammer, SignedMonomial};
    use crate::ratfunc::rf_make;

    fn qp(pairs: &[(u32, i64)]) -> MPoly {
        MPoly::from_terms(pairs.iter().map(|&(e, c)| (Exp::new(e, 0, 0), int(c))))
    }

    #[test]
    fn modulus_shapes() {
        // [3]Φ_3^3 = Φ_3^4 = (1+q+q^2)^4
        let m = modulus_build(ModulusKind::NPhi3, 3).unwrap();
        assert_eq!(*m.poly(), qp(&[(0, 1), (1, 1), (2, 1)]).pow(4));
        assert_eq!(m.degree(), 8);

        let m = modulus_build(ModulusKind::Phi2, 5).unwrap();
        assert_eq!(*m.poly(), cyclotomic(5).pow(2));

        // (PARAM_A, 3) = (1+q+q^2)^2 (1-aq^3)(a-q^3)
        let m = modulus_build(ModulusKind::ParamA, 3).unwrap();
        let phi3 = qp(&[(0, 1), (1, 1), (2, 1)]);
        let one_minus_aq3 = MPoly::from_terms([
            (Exp::ZERO, int(1)),
            (Exp::new(3, 1, 0), int(-1)),
        ]);
        let a_minus_q3 = MPoly::from_terms([
            (Exp::new(0, 1, 0), int(1)),
            (Exp::new(3, 0, 0), int(-1)),
        ]);
        assert_eq!(
            *m.poly(),
            phi3.pow(2).mul(&one_minus_aq3).mul(&a_minus_q3)
        );

        assert_eq!(
            modulus_build(ModulusKind::NPhi3, 1).unwrap_err(),
            CongruenceError::TrivialModulus
        );
    }

    #[test]
    fn fermat_instances() {
        // q^5 ≡ 1 (mod Φ_5), q not ≡ 1
        let m = modulus_build(ModulusKind::Phi2, 5).unwrap();
        let phi5_only = Modulus::from_factors(
            vec![(cyclotomic(5).as_ref().clone(), 1)],
            "Φ_5(q)".into(),
        );
        let q5 = RatFunc::from_poly(qp(&[(5, 1)]));
        let q1 = RatFunc::from_poly(qp(&[(1, 1)]));
        let one = RatFunc::one();
        assert!(congruent_mod(&q5, &one, &phi5_only).holds);
        assert!(!congruent_mod(&q1, &one, &phi5_only).holds);
        assert!(!congruent_mod(&q5, &one, &m).holds); // mod Φ_5² it fails

        // (-q;q)_4 ≡ 1 (mod Φ_5): Lemma-style instance at n = 5
        let lhs = RatFunc::from_poly(q_pochhammer(SignedMonomial::neg_q_pow(1), 1, 4));
        assert!(congruent_mod(&lhs, &one, &phi5_only).holds);
    }

    #[test]
    fn non_coprime_denominator_warns() {
        let m = modulus_build(ModulusKind::Phi2, 3).unwrap();
        // 1/Φ_3 vs 0: difference has Φ_3 in the denominator
        let x = rf_make(&MPoly::one(), &qp(&[(0, 1), (1, 1), (2, 1)])).unwrap();
        let out = congruent_mod(&x, &RatFunc::zero(), &m);
        assert!(!out.holds);
        assert_eq!(out.warnings, vec![Warning::NonCoprimeDenominator]);
    }

    #[test]
    fn padic_examples() {
        // 22/9 ≡ -2 (mod 5): 22/9 + 2 = 40/9
        let m = PadicModulus::new(5, 1).unwrap();
        assert!(padic_congruent(&ratio(22, 9), &int(-2), &m).unwrap());
        // 435/512 ≡ 5 - 125 (mod 5^4): 61875 = 5^4 * 99
        let m4 = PadicModulus::new(5, 4).unwrap();
        assert!(padic_congruent(&ratio(435, 512), &int(-120), &m4).unwrap());
        assert!(padic_congruent(&int(1), &int(1), &m4).unwrap());
        // precondition failure
        assert_eq!(
            padic_congruent(&ratio(1, 5), &int(0), &m),
            Err(CongruenceError::NonInvertibleDenominator)
        );
        assert_eq!(PadicModulus::new(9, 1), Err(CongruenceError::NotPrime(9)));
    }
}
