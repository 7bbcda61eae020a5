//! Builders and checks for the q-side statements: both truncations of the
//! alternating (4k+1) series, the (3k+1) series, the supporting lemmas, the
//! proof-internal reductions, and the parametric statements with symbolic a
//! (and b).

use num_traits::One;

use crate::coeff::{ratio, Coefficient};
use crate::congruence::{congruent_mod, modulus_build, Modulus, ModulusKind, Warning};
use crate::poly::{Exp, MPoly};
use crate::qkit::{q_binomial, q_integer, q_pochhammer, SignedMonomial};
use crate::ratfunc::{RatFunc, RatSum, TermBuilder};
use crate::wz::{telescoping_check, wz_f, wz_g, WZPairId};

use super::{Domain, Outcome, Statement, StatementKind, Variant, BOTH, NONE};

const Q: SignedMonomial = SignedMonomial {
    negative: false,
    e_q: 1,
    e_a: 0,
    e_b: 0,
};
const Q2: SignedMonomial = SignedMonomial {
    negative: false,
    e_q: 2,
    e_a: 0,
    e_b: 0,
};

fn half(n: u64) -> u64 {
    (n - 1) / 2
}

/// (n^2-1)/24, the rational coefficient in the shared right side.
fn c24(n: u64) -> Coefficient {
    ratio((n * n - 1) as i64, 24)
}

fn c12(n: u64) -> Coefficient {
    ratio((n * n - 1) as i64, 12)
}

/// The triangular exponent n(n-1)/2.
fn tri(n: u64) -> i64 {
    (n * (n - 1) / 2) as i64
}

fn one_minus_q_pow(m: u32) -> MPoly {
    MPoly::one().sub(&MPoly::q_pow(m))
}

/// a - q^e
fn a_minus_q_pow(e: u32) -> MPoly {
    MPoly::from_terms([
        (Exp::new(0, 1, 0), Coefficient::one()),
        (Exp::new(e, 0, 0), -Coefficient::one()),
    ])
}

/// b - q^e
fn b_minus_q_pow(e: u32) -> MPoly {
    MPoly::from_terms([
        (Exp::new(0, 0, 1), Coefficient::one()),
        (Exp::new(e, 0, 0), -Coefficient::one()),
    ])
}

/// 1 - a·q^e
fn one_minus_a_q(e: u32) -> MPoly {
    MPoly::one().sub(&MPoly::from_terms([(Exp::new(e, 1, 0), Coefficient::one())]))
}

/// 1 - b·q^e
fn one_minus_b_q(e: u32) -> MPoly {
    MPoly::one().sub(&MPoly::from_terms([(Exp::new(e, 0, 1), Coefficient::one())]))
}

/// (-q;q)_count
fn neg_poch(count: u64) -> MPoly {
    q_pochhammer(SignedMonomial::neg_q_pow(1), 1, count as i64)
}

/// N = (n-1)/2 for the half variant, n-1 for the full variant.
fn upper_for(n: u64, variant: Option<Variant>) -> u64 {
    match variant.expect("statement has variants") {
        Variant::Half => half(n),
        Variant::Full => n - 1,
    }
}

/// Runs a single congruence check against the modulus kind, taking the
/// trivial-modulus path for n = 1: both sides are still built (any builder
/// panic would surface), holds is recorded true, and a warning is attached.
fn check_q(n: u64, kind: ModulusKind, sides: impl FnOnce() -> (RatFunc, RatFunc)) -> Outcome {
    match modulus_build(kind, n as u32) {
        Err(_) => {
            let _ = sides();
            Outcome {
                holds: true,
                modulus_degree: 0,
                warnings: vec![Warning::TrivialModulus],
            }
        }
        Ok(m) => check_against(&m, sides),
    }
}

fn check_against(m: &Modulus, sides: impl FnOnce() -> (RatFunc, RatFunc)) -> Outcome {
    let (lhs, rhs) = sides();
    let out = congruent_mod(&lhs, &rhs, m);
    Outcome {
        holds: out.holds,
        modulus_degree: m.degree(),
        warnings: out.warnings,
    }
}

fn exact_outcome(holds: bool) -> Outcome {
    Outcome {
        holds,
        modulus_degree: 0,
        warnings: Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// Shared sum builders
// ---------------------------------------------------------------------------

/// Σ_{k=0}^{upper} (-1)^k q^{k²} [4k+1] (q;q²)_k³ / (q²;q²)_k³.
fn lhs_4k1(upper: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..=upper {
        let t = base
            .clone()
            .sign(k)
            .q_power((k * k) as i64)
            .num_poly(&q_integer(4 * k as u32 + 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k < upper {
            base = base
                .num_poly(&one_minus_q_pow(2 * k as u32 + 1).pow(3))
                .den_one_minus_q_pow(2 * k as u32 + 2, 3);
        }
    }
    acc.finish()
}

/// Σ_{k=0}^{n-1} (-1)^k [3k+1] (q;q²)_k³ / (q;q)_k³.
fn lhs_3k1(n: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..n {
        let t = base.clone().sign(k).num_poly(&q_integer(3 * k as u32 + 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k + 1 < n {
            base = base
                .num_poly(&one_minus_q_pow(2 * k as u32 + 1).pow(3))
                .den_one_minus_q_pow(k as u32 + 1, 3);
        }
    }
    acc.finish()
}

/// Σ_{k=1}^{(n-1)/2} q^k (q²;q²)_k / ([2k][2k-1] (q;q²)_k).
fn correction_sum(n: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 1..=half(n) {
        base = base
            .num_poly(&one_minus_q_pow(2 * k as u32))
            .den_one_minus_q_pow(2 * k as u32 - 1, 1);
        let t = base
            .clone()
            .q_power(k as i64)
            .den_q_int(2 * k as u32, 1)
            .den_q_int(2 * k as u32 - 1, 1);
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
    }
    acc.finish()
}

/// Σ_{k=0}^{upper} (q;q²)_k² q^{2k} / (q²;q²)_k².
fn squares_sum(upper: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..=upper {
        let t = base.clone().q_power(2 * k as i64);
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k < upper {
            base = base
                .num_poly(&one_minus_q_pow(2 * k as u32 + 1).pow(2))
                .den_one_minus_q_pow(2 * k as u32 + 2, 2);
        }
    }
    acc.finish()
}

/// Σ_{k=0}^{n-1} q^k C(2k,k)_q / (-q;q)_k.
fn central_sum(n: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..n {
        let t = base
            .clone()
            .q_power(k as i64)
            .num_poly(&q_binomial(2 * k as i64, k as i64, 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k + 1 < n {
            base = base.den_one_plus_q_pow(k as u32 + 1, 1);
        }
    }
    acc.finish()
}

/// The shared right side of both theorems:
/// (-1)^{(n-1)/2} q^{(1-n²)/4} (q^{n(n-1)/2}[n] + (n²-1)(1-q)²[n]³/24)
///   + [n]³ Σ_{k=1}^{(n-1)/2} q^k (q²;q²)_k/([2k][2k-1](q;q²)_k).
pub fn build_rhs_common(n: u64) -> RatFunc {
    assert!(n % 2 == 1 && n >= 1);
    let qn = q_integer(n as u32);
    let inner = MPoly::q_pow(tri(n) as u32)
        .mul(&qn)
        .add(&one_minus_q_pow(1).pow(2).mul(&qn.pow(3)).scale(&c24(n)));
    let part1 = TermBuilder::new()
        .sign(half(n))
        .q_power((1 - (n as i64) * (n as i64)) / 4)
        .num_poly(&inner)
        .build();
    let part2 = RatFunc::from_poly(qn.pow(3)).mul(&correction_sum(n));
    part1.add(&part2)
}

/// [n] q^{(n-1)²/4} (-1)^{(n-1)/2}, the right side of the plain q-analogues.
fn simple_rhs(n: u64) -> RatFunc {
    TermBuilder::new()
        .sign(half(n))
        .q_power(((n - 1) * (n - 1) / 4) as i64)
        .num_poly(&q_integer(n as u32))
        .build()
}

// ---------------------------------------------------------------------------
// Parametric sums
// ---------------------------------------------------------------------------

/// One side of the parametric congruence with both a and b symbolic:
/// Σ_{k=0}^{upper} [4k+1] (aq;q²)_k (q/a;q²)_k (q/b;q²)_k (q;q²)_k b^k
///                 / ((aq²;q²)_k (q²/a;q²)_k (bq²;q²)_k (q²;q²)_k).
/// The 1/a^k from (q/a;q²)_k cancels against (q²/a;q²)_k, and
/// (q/b;q²)_k b^k = ∏_j (b - q^{2j+1}), so every factor is polynomial.
fn equiv_param_sum(upper: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..=upper {
        let t = base.clone().num_poly(&q_integer(4 * k as u32 + 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k < upper {
            let odd = 2 * k as u32 + 1;
            let even = 2 * k as u32 + 2;
            base = base
                .num_poly(&one_minus_a_q(odd))
                .num_poly(&a_minus_q_pow(odd))
                .num_poly(&b_minus_q_pow(odd))
                .num_poly(&one_minus_q_pow(odd))
                .den_factor(&one_minus_a_q(even), 1, true)
                .den_factor(&a_minus_q_pow(even), 1, true)
                .den_factor(&one_minus_b_q(even), 1, true)
                .den_one_minus_q_pow(even, 1);
        }
    }
    acc.finish()
}

/// Left side of the parametric combination with symbolic a:
/// Σ_{k=0}^{upper} (-1)^k q^{k²} [4k+1] (aq;q²)_k (q/a;q²)_k (q;q²)_k
///                 / ((aq²;q²)_k (q²/a;q²)_k (q²;q²)_k).
fn param_4k1_sum(upper: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..=upper {
        let t = base
            .clone()
            .sign(k)
            .q_power((k * k) as i64)
            .num_poly(&q_integer(4 * k as u32 + 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k < upper {
            let odd = 2 * k as u32 + 1;
            let even = 2 * k as u32 + 2;
            base = base
                .num_poly(&one_minus_a_q(odd))
                .num_poly(&a_minus_q_pow(odd))
                .num_poly(&one_minus_q_pow(odd))
                .den_factor(&one_minus_a_q(even), 1, true)
                .den_factor(&a_minus_q_pow(even), 1, true)
                .den_one_minus_q_pow(even, 1);
        }
    }
    acc.finish()
}

/// Right side of the parametric combination with symbolic a:
/// Σ_{k=0}^{n-1} (-1)^k [3k+1] (aq;q²)_k (q/a;q²)_k (q;q²)_k
///               / ((aq;q)_k (q/a;q)_k (q;q)_k).
fn param_3k1_sum(n: u64) -> RatFunc {
    let mut acc = RatSum::new();
    let mut base = TermBuilder::new();
    for k in 0..n {
        let t = base.clone().sign(k).num_poly(&q_integer(3 * k as u32 + 1));
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
        if k + 1 < n {
            let odd = 2 * k as u32 + 1;
            let next = k as u32 + 1;
            base = base
                .num_poly(&one_minus_a_q(odd))
                .num_poly(&a_minus_q_pow(odd))
                .num_poly(&one_minus_q_pow(odd))
                .den_factor(&one_minus_a_q(next), 1, true)
                .den_factor(&a_minus_q_pow(next), 1, true)
                .den_one_minus_q_pow(next, 1);
        }
    }
    acc.finish()
}

/// The closed three-term expression the parametric left side reduces to:
/// (-1)^{(n-1)/2} q^{(n-1)²/4} [n]
///   + (-1)^{(n-1)/2} q^{(n-1)²/4} [n] (1-aqⁿ)(a-qⁿ)/(1-a)²
///   - [n] (1-aqⁿ)(a-qⁿ)/(1-a)² Σ_{k=0}^{(n-1)/2} (q;q²)_k²/((aq²;q²)_k (q²/a;q²)_k).
fn param_closed_expression(n: u64) -> RatFunc {
    let qn = q_integer(n as u32);
    let shift = ((n - 1) * (n - 1) / 4) as i64;
    let phi_part = one_minus_a_q(n as u32).mul(&a_minus_q_pow(n as u32));
    let a_minus_one = MPoly::from_terms([
        (Exp::new(0, 1, 0), Coefficient::one()),
        (Exp::ZERO, -Coefficient::one()),
    ]);

    let t1 = TermBuilder::new()
        .sign(half(n))
        .q_power(shift)
        .num_poly(&qn)
        .build();
    let t2 = TermBuilder::new()
        .sign(half(n))
        .q_power(shift)
        .num_poly(&qn)
        .num_poly(&phi_part)
        .den_factor(&a_minus_one, 2, true)
        .build();

    // Σ_k (q;q²)_k² a^k / ((aq²;q²)_k ∏_j (a - q^{2j+2}))
    let inner = {
        let mut acc = RatSum::new();
        let mut base = TermBuilder::new();
        for k in 0..=half(n) {
            let (tn, td) = base.clone().build_unreduced();
            acc.add_parts(tn, &td);
            if k < half(n) {
                let odd = 2 * k as u32 + 1;
                let even = 2 * k as u32 + 2;
                base = base
                    .num_poly(&one_minus_q_pow(odd).pow(2))
                    .num_poly(&MPoly::var(crate::poly::Var::A))
                    .den_factor(&one_minus_a_q(even), 1, true)
                    .den_factor(&a_minus_q_pow(even), 1, true);
            }
        }
        acc.finish()
    };
    let t3 = TermBuilder::new()
        .coef(&(-Coefficient::one()))
        .num_poly(&qn)
        .num_poly(&phi_part)
        .den_factor(&a_minus_one, 2, true)
        .build()
        .mul(&inner);

    t1.add(&t2).add(&t3)
}

// ---------------------------------------------------------------------------
// Check functions
// ---------------------------------------------------------------------------

fn check_vanhamme_intro(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi2, || (lhs_4k1(half(n)), simple_rhs(n)))
}

fn check_thm1_half(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || {
        (lhs_4k1(half(n)), build_rhs_common(n))
    })
}

fn check_thm1_full(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || {
        (lhs_4k1(n - 1), build_rhs_common(n))
    })
}

fn check_thm2(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || (lhs_3k1(n), build_rhs_common(n)))
}

fn check_q_div3(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi2, || (lhs_3k1(n), simple_rhs(n)))
}

fn check_wolstenholme(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        let lhs = RatFunc::from_poly(q_binomial(2 * n as i64 - 1, n as i64 - 1, 1));
        // (-1)^{n-1} = +1 for odd n
        let rhs = MPoly::q_pow(tri(n) as u32).add(
            &one_minus_q_pow(1)
                .pow(2)
                .mul(&q_integer(n as u32).pow(2))
                .scale(&c12(n)),
        );
        (lhs, RatFunc::from_poly(rhs))
    })
}

fn check_morley(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        let lhs = RatFunc::from_poly(q_binomial(n as i64 - 1, half(n) as i64, 2));
        let inner = neg_poch(n - 1).pow(2).sub(
            &one_minus_q_pow(1)
                .pow(2)
                .mul(&q_integer(n as u32).pow(2))
                .scale(&c24(n)),
        );
        let rhs = TermBuilder::new()
            .sign(half(n))
            .q_power((1 - (n as i64) * (n as i64)) / 4)
            .num_poly(&inner)
            .build();
        (lhs, rhs)
    })
}

fn check_fermat(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi1, || {
        (RatFunc::from_poly(neg_poch(n - 1)), RatFunc::one())
    })
}

fn check_equiv_parametric(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::ParamA, || {
        (equiv_param_sum(half(n)), equiv_param_sum(n - 1))
    })
}

fn check_equiv2(n: u64, _v: Option<Variant>) -> Outcome {
    // Main congruence mod Φ_n⁴ plus the rider: both sides vanish mod [n].
    let lhs = lhs_4k1(half(n));
    let rhs = lhs_4k1(n - 1);
    let main = check_q(n, ModulusKind::Phi4, || (lhs.clone(), rhs.clone()));
    let rider_l = check_q(n, ModulusKind::NOnly, || (lhs.clone(), RatFunc::zero()));
    let rider_r = check_q(n, ModulusKind::NOnly, || (rhs.clone(), RatFunc::zero()));
    main.and(rider_l).and(rider_r)
}

fn check_gppk_new(n: u64, _v: Option<Variant>) -> Outcome {
    let m = modulus_build(ModulusKind::NPhi3, n as u32).expect("n >= 3");
    let mut outcome = Outcome {
        holds: true,
        modulus_degree: m.degree(),
        warnings: Vec::new(),
    };
    for k in 1..=half(n) {
        let g = wz_g(WZPairId::Sec2, ((n + 1) / 2) as i64, k as i64);
        // exact product rewriting of G((n+1)/2, k)
        let rewritten = TermBuilder::new()
            .sign((n + 1) / 2 + k)
            .q_power({
                let d = ((n + 1) / 2) as i64 - k as i64;
                d * d
            })
            .num_poly(&one_minus_q_pow(n as u32).pow(3))
            .num_poch(Q, 2, half(n) as i64)
            .num_poch(Q, 2, half(n) as i64)
            .num_poch(Q, 2, half(n) as i64)
            .num_poch(SignedMonomial::q_pow(n as u32 + 2), 2, k as i64 - 1)
            .den_one_minus_q_pow(1, 1)
            .den_poch_q(2, 2, half(n) as i64)
            .den_poch_q(2, 2, half(n) as i64)
            .den_poch_q(2, 2, ((n + 1) / 2) as i64 - k as i64)
            .den_poch_q(1, 2, k as i64)
            .den_poch_q(1, 2, k as i64)
            .build();
        outcome.holds &= g == rewritten;
        // the strengthened congruence mod [n]Φ_n³
        let rhs = TermBuilder::new()
            .q_power(k as i64)
            .num_poly(&q_integer(n as u32).pow(3))
            .num_poch(Q2, 2, k as i64)
            .den_q_int(2 * k as u32, 1)
            .den_q_int(2 * k as u32 - 1, 1)
            .den_poch_q(1, 2, k as i64)
            .build();
        let out = congruent_mod(&g, &rhs, &m);
        outcome.holds &= out.holds;
        for w in out.warnings {
            if !outcome.warnings.contains(&w) {
                outcome.warnings.push(w);
            }
        }
    }
    outcome
}

fn check_abcd(n: u64, _v: Option<Variant>) -> Outcome {
    let m = modulus_build(ModulusKind::NPhi3, n as u32).expect("n >= 3");
    let f = wz_f(WZPairId::Sec2, half(n) as i64, half(n) as i64);

    // exact: F = [n] C(2n-1,n-1)_q C(n-1,(n-1)/2)_{q²} / (-q;q)_{n-1}²
    let product_form = TermBuilder::new()
        .num_poly(&q_integer(n as u32))
        .num_poly(&q_binomial(2 * n as i64 - 1, n as i64 - 1, 1))
        .num_poly(&q_binomial(n as i64 - 1, half(n) as i64, 2))
        .den_poch_neg_q(1, 1, n as i64 - 1)
        .den_poch_neg_q(1, 1, n as i64 - 1)
        .build();
    let exact = exact_outcome(f == product_form);

    // middle congruence, with the 2 - q^{n(n-1)/2}/(-q;q)_{n-1}² factor
    let qn = q_integer(n as u32);
    let poly_part = MPoly::q_pow(tri(n) as u32).mul(&qn).add(
        &one_minus_q_pow(1)
            .pow(2)
            .mul(&qn.pow(3))
            .scale(&(c24(n) * ratio(2, 1))),
    );
    let middle_a = TermBuilder::new()
        .sign(half(n))
        .q_power((1 - (n as i64) * (n as i64)) / 4)
        .num_poly(&poly_part)
        .build();
    let middle_b = TermBuilder::new()
        .sign(half(n) + 1)
        .q_power((1 - (n as i64) * (n as i64)) / 4 + tri(n))
        .coef(&c24(n))
        .num_poly(&one_minus_q_pow(1).pow(2))
        .num_poly(&qn.pow(3))
        .den_poch_neg_q(1, 1, n as i64 - 1)
        .den_poch_neg_q(1, 1, n as i64 - 1)
        .build();
    let middle = middle_a.add(&middle_b);
    let mid = check_against(&m, || (f.clone(), middle));

    // final form: the polynomial part of the shared right side
    let inner = MPoly::q_pow(tri(n) as u32)
        .mul(&qn)
        .add(&one_minus_q_pow(1).pow(2).mul(&qn.pow(3)).scale(&c24(n)));
    let final_form = TermBuilder::new()
        .sign(half(n))
        .q_power((1 - (n as i64) * (n as i64)) / 4)
        .num_poly(&inner)
        .build();
    let fin = check_against(&m, || (f.clone(), final_form));

    exact.and(mid).and(fin)
}

fn check_sec2_aux1(n: u64, _v: Option<Variant>) -> Outcome {
    let m = modulus_build(ModulusKind::Phi1, n as u32).expect("n >= 3");
    let mut outcome = Outcome {
        holds: true,
        modulus_degree: m.degree(),
        warnings: Vec::new(),
    };
    for k in 1..=half(n) {
        let lhs = RatFunc::from_poly(q_pochhammer(Q2, 2, ((n + 1) / 2 - k) as i64));
        // exact: (q²;q²)_{(n+1)/2-k} = (q²;q²)_{(n-1)/2} / (q^{n+3-2k};q²)_{k-1}
        let exact_rhs = TermBuilder::new()
            .num_poch(Q2, 2, half(n) as i64)
            .den_poch_q(n as u32 + 3 - 2 * k as u32, 2, k as i64 - 1)
            .build();
        outcome.holds &= lhs == exact_rhs;
        // ≡ (-1)^{k-1} q^{(k-1)²} (q²;q²)_{(n-1)/2}/(q;q²)_{k-1}  (mod Φ_n)
        let cong_rhs = TermBuilder::new()
            .sign(k - 1)
            .q_power(((k - 1) * (k - 1)) as i64)
            .num_poch(Q2, 2, half(n) as i64)
            .den_poch_q(1, 2, k as i64 - 1)
            .build();
        let out = congruent_mod(&lhs, &cong_rhs, &m);
        outcome.holds &= out.holds;
        for w in out.warnings {
            if !outcome.warnings.contains(&w) {
                outcome.warnings.push(w);
            }
        }
    }
    outcome
}

fn check_sec2_aux2(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi1, || {
        let lhs = TermBuilder::new()
            .num_poch(Q, 2, half(n) as i64)
            .den_poch_q(2, 2, half(n) as i64)
            .build();
        let rhs = TermBuilder::new()
            .sign(half(n))
            .q_power(((n - 1) * (n - 1) / 4) as i64)
            .build();
        (lhs, rhs)
    })
}

fn check_sec3_aux_ratio(n: u64, _v: Option<Variant>) -> Outcome {
    let m = modulus_build(ModulusKind::Phi2, n as u32).expect("n >= 3");
    let mut outcome = Outcome {
        holds: true,
        modulus_degree: m.degree(),
        warnings: Vec::new(),
    };
    for k in 1..=half(n) {
        let lhs = TermBuilder::new()
            .num_poch(Q, 2, (n - k) as i64)
            .den_poch_q(2, 2, (n - k) as i64)
            .build();
        // ≡ -q^k (1-q^n)(q²;q²)_{k-1}/(q;q²)_k  (mod Φ_n²)
        let rhs = TermBuilder::new()
            .coef(&(-Coefficient::one()))
            .q_power(k as i64)
            .num_poly(&one_minus_q_pow(n as u32))
            .num_poch(Q2, 2, k as i64 - 1)
            .den_poch_q(1, 2, k as i64)
            .build();
        let out = congruent_mod(&lhs, &rhs, &m);
        outcome.holds &= out.holds;
        for w in out.warnings {
            if !outcome.warnings.contains(&w) {
                outcome.warnings.push(w);
            }
        }
    }
    outcome
}

fn check_sec3_aux_binom(n: u64, _v: Option<Variant>) -> Outcome {
    let m = modulus_build(ModulusKind::Phi1, n as u32).expect("n >= 3");
    let mut outcome = Outcome {
        holds: true,
        modulus_degree: m.degree(),
        warnings: Vec::new(),
    };
    for k in 1..=half(n) {
        let lhs = RatFunc::from_poly(q_binomial(2 * (n - k) as i64 + 1, n as i64, 1));
        let out = congruent_mod(&lhs, &RatFunc::one(), &m);
        outcome.holds &= out.holds;
    }
    outcome
}

/// Σ_{k=1}^{(n+1)/2} C(2n-2k,n-1)_q (q;q²)_{n-k} q^{n+1-2k} / (q²;q²)_{n-k}.
fn binom_weighted_sum(n: u64) -> RatFunc {
    let mut acc = RatSum::new();
    for k in 1..=(n + 1) / 2 {
        let t = TermBuilder::new()
            .num_poly(&q_binomial(2 * (n - k) as i64, n as i64 - 1, 1))
            .num_poch(Q, 2, (n - k) as i64)
            .q_power(n as i64 + 1 - 2 * k as i64)
            .den_poch_q(2, 2, (n - k) as i64);
        let (tn, td) = t.build_unreduced();
        acc.add_parts(tn, &td);
    }
    acc.finish()
}

fn check_eq_2nk(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        let lhs = binom_weighted_sum(n);
        let inner = neg_poch(n - 1).sub(
            &one_minus_q_pow(1)
                .pow(2)
                .mul(&q_integer(n as u32).pow(2))
                .scale(&c24(n)),
        );
        let rhs_a = TermBuilder::new()
            .sign(half(n))
            .q_power((1 - (n as i64) * (n as i64)) / 4)
            .num_poly(&inner)
            .build();
        let rhs_b =
            RatFunc::from_poly(q_integer(n as u32).pow(2)).mul(&correction_sum(n));
        (lhs, rhs_a.add(&rhs_b))
    })
}

fn check_eq_2nk_2(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        let lhs = TermBuilder::new()
            .num_poly(&q_binomial(2 * n as i64 - 1, n as i64 - 1, 1))
            .den_poch_neg_q(1, 1, n as i64 - 1)
            .build();
        // (-1)^{n-1} = +1 for odd n
        let rhs_a = TermBuilder::new()
            .q_power(tri(n))
            .den_poch_neg_q(1, 1, n as i64 - 1)
            .build();
        let rhs_b = RatFunc::from_poly(
            one_minus_q_pow(1)
                .pow(2)
                .mul(&q_integer(n as u32).pow(2))
                .scale(&c12(n)),
        );
        (lhs, rhs_a.add(&rhs_b))
    })
}

fn check_identity_fn0(n: u64, _v: Option<Variant>) -> Outcome {
    exact_outcome(telescoping_check(WZPairId::Sec3, n as i64))
}

fn check_q4k_3k_sec4(n: u64, v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || {
        (lhs_4k1(upper_for(n, v)), lhs_3k1(n))
    })
}

fn check_conj_parametric(n: u64, v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::ParamA, || {
        (param_4k1_sum(upper_for(n, v)), param_3k1_sum(n))
    })
}

fn check_thm53_expression(n: u64, v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::ParamA, || {
        (param_4k1_sum(upper_for(n, v)), param_closed_expression(n))
    })
}

fn check_wei(n: u64, v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || {
        let lhs = lhs_4k1(upper_for(n, v));
        let qn = q_integer(n as u32);
        let prefactor_poly = qn.add(&one_minus_q_pow(1).pow(2).mul(&qn.pow(3)).scale(&c24(n)));
        let rhs = TermBuilder::new()
            .q_power((1 - n as i64) / 2)
            .num_poly(&prefactor_poly)
            .build()
            .mul(&squares_sum(half(n)));
        (lhs, rhs)
    })
}

fn check_guozeng(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi2, || {
        let rhs = TermBuilder::new()
            .sign(half(n))
            .q_power(((n * n - 1) / 4) as i64)
            .build();
        (squares_sum(half(n)), rhs)
    })
}

fn check_q4k_3k_2(n: u64, v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::NPhi3, || {
        let lhs = TermBuilder::new()
            .q_power(half(n) as i64)
            .build()
            .mul(&lhs_4k1(upper_for(n, v)));
        let qn = q_integer(n as u32);
        let rhs_a = RatFunc::from_poly(qn.clone()).mul(&squares_sum(half(n)));
        let rhs_b = TermBuilder::new()
            .sign(half(n))
            .q_power(((n * n - 1) / 4) as i64)
            .coef(&c24(n))
            .num_poly(&one_minus_q_pow(1).pow(2))
            .num_poly(&qn.pow(3))
            .build();
        (lhs, rhs_a.add(&rhs_b))
    })
}

fn check_cor_one(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        let lhs = squares_sum(half(n));
        let qn = q_integer(n as u32);
        let t1 = TermBuilder::new()
            .sign(half(n))
            .q_power(((n * n - 1) / 4) as i64)
            .build();
        let correction_poly = one_minus_q_pow(1).pow(2).mul(&qn.pow(2)).scale(&c24(n));
        let t2a = TermBuilder::new()
            .sign(half(n))
            .q_power(-(((n - 1) * (n - 1) / 4) as i64))
            .num_poly(&correction_poly)
            .build();
        let t2b = TermBuilder::new()
            .sign(half(n) + 1)
            .q_power(((n * n - 1) / 4) as i64)
            .num_poly(&correction_poly)
            .build();
        let t3 = TermBuilder::new()
            .q_power(half(n) as i64)
            .num_poly(&qn.pow(2))
            .build()
            .mul(&correction_sum(n));
        (lhs, t1.add(&t2a).add(&t2b).add(&t3))
    })
}

fn check_tauraso(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi2, || {
        let rhs = TermBuilder::new()
            .sign(half(n))
            .q_power(((n * n - 1) / 4) as i64)
            .build();
        (central_sum(n), rhs)
    })
}

fn check_conj2(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi3, || {
        (central_sum(n), squares_sum(n - 1))
    })
}

pub(super) fn check_fixture_wrong(n: u64, _v: Option<Variant>) -> Outcome {
    check_q(n, ModulusKind::Phi1, || {
        (
            RatFunc::from_poly(neg_poch(n - 1)),
            RatFunc::from_poly(MPoly::int(2)),
        )
    })
}

/// Main modulus sample used by listings, rendered at the smallest in-domain n.
pub(super) fn modulus_sample(id: &str, n: u32) -> Option<MPoly> {
    let kind = modulus_kind_of(id)?;
    modulus_build(kind, n).ok().map(|m| m.poly().clone())
}

fn modulus_kind_of(id: &str) -> Option<ModulusKind> {
    Some(match id {
        "eq-q-vanhamme-intro" | "eq-q-div3" => ModulusKind::NPhi2,
        "thm1-half" | "thm1-full" | "thm2" | "eq-gppk-new" | "eq-abcd" | "eq-q4k-3k-sec4"
        | "eq-wei" | "eq-q4k-3k-2" => ModulusKind::NPhi3,
        "lem-q-wolstenholme" | "lem-q-morley" | "eq-2nk" | "eq-2nk-2" | "cor-one" | "conj-2" => {
            ModulusKind::Phi3
        }
        "lem-q-fermat" | "sec2-aux-1" | "sec2-aux-2" | "sec3-aux-binom" => ModulusKind::Phi1,
        "sec3-aux-ratio" | "eq-guozeng" | "eq-q-tauraso" => ModulusKind::Phi2,
        "eq-equiv2" => ModulusKind::Phi4,
        "eq-equiv-parametric" | "conj-parametric" | "thm53-expression" => ModulusKind::ParamA,
        _ => return None,
    })
}

pub(super) fn statements() -> Vec<Statement> {
    vec![
        Statement {
            id: "eq-q-vanhamme-intro",
            kind: StatementKind::QCongruence,
            description: "alternating (4k+1) q-series truncated at (n-1)/2 reduces to [n]q^{(n-1)^2/4}(-1)^{(n-1)/2}",
            modulus_label: "[n]·Φ_n(q)²",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_vanhamme_intro,
        },
        Statement {
            id: "thm1-half",
            kind: StatementKind::QCongruence,
            description: "refined evaluation of the alternating (4k+1) q-series, upper limit (n-1)/2",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_thm1_half,
        },
        Statement {
            id: "thm1-full",
            kind: StatementKind::QCongruence,
            description: "refined evaluation of the alternating (4k+1) q-series, upper limit n-1",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_thm1_full,
        },
        Statement {
            id: "thm2",
            kind: StatementKind::QCongruence,
            description: "refined evaluation of the alternating (3k+1) q-series with cubed odd/plain Pochhammer ratio",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_thm2,
        },
        Statement {
            id: "eq-q-div3",
            kind: StatementKind::QCongruence,
            description: "alternating (3k+1) q-series reduces to [n]q^{(n-1)^2/4}(-1)^{(n-1)/2}",
            modulus_label: "[n]·Φ_n(q)²",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_q_div3,
        },
        Statement {
            id: "lem-q-wolstenholme",
            kind: StatementKind::QCongruence,
            description: "central q-binomial C(2n-1,n-1)_q evaluation with (n²-1)(1-q)²[n]²/12 correction",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_wolstenholme,
        },
        Statement {
            id: "lem-q-morley",
            kind: StatementKind::QCongruence,
            description: "base-q² central binomial C(n-1,(n-1)/2)_{q²} evaluation with (-q;q)_{n-1}² leading term",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_morley,
        },
        Statement {
            id: "lem-q-fermat",
            kind: StatementKind::QCongruence,
            description: "(-q;q)_{n-1} ≡ 1: the q-analogue of reducing 2^{n-1}",
            modulus_label: "Φ_n(q)",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_fermat,
        },
        Statement {
            id: "eq-equiv-parametric",
            kind: StatementKind::QParametric,
            description: "half-range and full-range parametric (4k+1) sums agree, a and b symbolic",
            modulus_label: "[n]·Φ_n(q)·(1-aqⁿ)(a-qⁿ)",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_equiv_parametric,
        },
        Statement {
            id: "eq-equiv2",
            kind: StatementKind::QCongruence,
            description: "half-range and full-range (4k+1) sums agree mod Φ_n⁴; both vanish mod [n]",
            modulus_label: "Φ_n(q)⁴ (and [n] rider)",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_equiv2,
        },
        Statement {
            id: "eq-gppk-new",
            kind: StatementKind::QCongruence,
            description: "per k: boundary G-column values reduce to q^k[n]³(q²;q²)_k/([2k][2k-1](q;q²)_k)",
            modulus_label: "[n]·Φ_n(q)³ (per k)",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_gppk_new,
        },
        Statement {
            id: "eq-abcd",
            kind: StatementKind::QCongruence,
            description: "diagonal F-value equals the q-binomial product and reduces to the closed polynomial form",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_abcd,
        },
        Statement {
            id: "sec2-aux-1",
            kind: StatementKind::QCongruence,
            description: "per k: (q²;q²)_{(n+1)/2-k} reduction via q^n ≡ 1",
            modulus_label: "Φ_n(q) (per k)",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_sec2_aux1,
        },
        Statement {
            id: "sec2-aux-2",
            kind: StatementKind::QCongruence,
            description: "(q;q²)_{(n-1)/2}/(q²;q²)_{(n-1)/2} reduces to (-1)^{(n-1)/2}q^{(n-1)²/4}",
            modulus_label: "Φ_n(q)",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_sec2_aux2,
        },
        Statement {
            id: "sec3-aux-ratio",
            kind: StatementKind::QCongruence,
            description: "per k: (q;q²)_{n-k}/(q²;q²)_{n-k} reduces to -q^k(1-q^n)(q²;q²)_{k-1}/(q;q²)_k",
            modulus_label: "Φ_n(q)² (per k)",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_sec3_aux_ratio,
        },
        Statement {
            id: "sec3-aux-binom",
            kind: StatementKind::QCongruence,
            description: "per k: C(2n-2k+1,n)_q ≡ 1",
            modulus_label: "Φ_n(q) (per k)",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_sec3_aux_binom,
        },
        Statement {
            id: "eq-2nk",
            kind: StatementKind::QCongruence,
            description: "binomial-weighted tail sum reduces to the (-q;q)_{n-1} expression plus [n]² correction",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_eq_2nk,
        },
        Statement {
            id: "eq-2nk-2",
            kind: StatementKind::QCongruence,
            description: "C(2n-1,n-1)_q/(-q;q)_{n-1} splits into q^{n(n-1)/2}/(-q;q)_{n-1} plus the [n]² correction",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_eq_2nk_2,
        },
        Statement {
            id: "identity-fn03n+1",
            kind: StatementKind::QIdentity,
            description: "exact telescoped product form of the (3k+1) series (second WZ pair)",
            modulus_label: "exact identity",
            domain: Domain::OddN { min: 3 },
            variants: NONE,
            check: check_identity_fn0,
        },
        Statement {
            id: "eq-q4k-3k-sec4",
            kind: StatementKind::QCongruence,
            description: "the (4k+1) and (3k+1) series agree directly",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: BOTH,
            check: check_q4k_3k_sec4,
        },
        Statement {
            id: "conj-parametric",
            kind: StatementKind::QParametric,
            description: "parametric generalization: a-deformed (4k+1) and (3k+1) sums agree, a symbolic",
            modulus_label: "[n]·Φ_n(q)·(1-aqⁿ)(a-qⁿ)",
            domain: Domain::OddN { min: 1 },
            variants: BOTH,
            check: check_conj_parametric,
        },
        Statement {
            id: "thm53-expression",
            kind: StatementKind::QParametric,
            description: "a-deformed (4k+1) sum reduces to the closed three-term expression with (1-a)² poles",
            modulus_label: "[n]·Φ_n(q)·(1-aqⁿ)(a-qⁿ)",
            domain: Domain::OddN { min: 1 },
            variants: BOTH,
            check: check_thm53_expression,
        },
        Statement {
            id: "eq-wei",
            kind: StatementKind::QCongruence,
            description: "the (4k+1) series factors through the squared-ratio sum times q^{(1-n)/2}([n] + correction)",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: BOTH,
            check: check_wei,
        },
        Statement {
            id: "eq-guozeng",
            kind: StatementKind::QCongruence,
            description: "squared-ratio sum reduces to (-1)^{(n-1)/2}q^{(n²-1)/4}",
            modulus_label: "Φ_n(q)²",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_guozeng,
        },
        Statement {
            id: "eq-q4k-3k-2",
            kind: StatementKind::QCongruence,
            description: "rearranged factorization: q^{(n-1)/2}·(4k+1)-series vs [n]·squared-ratio sum plus correction",
            modulus_label: "[n]·Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: BOTH,
            check: check_q4k_3k_2,
        },
        Statement {
            id: "cor-one",
            kind: StatementKind::QCongruence,
            description: "squared-ratio sum evaluated with both exponent corrections and the [n]² correction sum",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_cor_one,
        },
        Statement {
            id: "eq-q-tauraso",
            kind: StatementKind::QCongruence,
            description: "Σ q^k C(2k,k)_q/(-q;q)_k reduces to (-1)^{(n-1)/2}q^{(n²-1)/4}",
            modulus_label: "Φ_n(q)²",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_tauraso,
        },
        Statement {
            id: "conj-2",
            kind: StatementKind::QCongruence,
            description: "Σ q^k C(2k,k)_q/(-q;q)_k agrees with the full-range squared-ratio sum",
            modulus_label: "Φ_n(q)³",
            domain: Domain::OddN { min: 1 },
            variants: NONE,
            check: check_conj2,
        },
    ]
}
