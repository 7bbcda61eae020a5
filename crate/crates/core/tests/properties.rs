//! Randomized algebraic properties: ring laws for polynomials, field laws
//! for rational functions, GCD contracts, and the congruence-predicate
//! algebra (reflexivity, symmetry, conditional transitivity, downward
//! closure).

use proptest::prelude::*;

use qcongruence::coeff::{int, Coefficient};
use qcongruence::congruence::{congruent_mod, modulus_build, ModulusKind};
use qcongruence::cyclotomic::cyclotomic;
use qcongruence::poly_gcd;
use qcongruence::ratfunc::{rf_arith, rf_make, RatOp};
use qcongruence::{Exp, MPoly, RatFunc};

fn arb_coeff() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6).prop_map(int)
}

fn arb_exp() -> impl Strategy<Value = Exp> {
    (0u32..6, 0u16..3, 0u16..3).prop_map(|(q, a, b)| Exp::new(q, a, b))
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((arb_exp(), arb_coeff()), 0..6).prop_map(MPoly::from_terms)
}

fn arb_poly_nonzero() -> impl Strategy<Value = MPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_poly_q() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..8, -6i64..=6), 0..6).prop_map(|pairs| {
        MPoly::from_terms(pairs.into_iter().map(|(e, c)| (Exp::new(e, 0, 0), int(c))))
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(), arb_poly_nonzero())
        .prop_map(|(n, d)| rf_make(&n, &d).expect("nonzero denominator"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exact_div_round_trip(a in arb_poly(), b in arb_poly_nonzero()) {
        let prod = a.mul(&b);
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both(a in arb_poly(), b in arb_poly_nonzero()) {
        let g = poly_gcd(&a, &b);
        prop_assert!(b.exact_div(&g).is_ok());
        if !a.is_zero() {
            prop_assert!(a.exact_div(&g).is_ok());
        }
    }

    #[test]
    fn gcd_scales_with_common_factor(
        a in arb_poly_nonzero(),
        b in arb_poly_nonzero(),
        g in arb_poly_nonzero(),
    ) {
        let lhs = poly_gcd(&a.mul(&g), &b.mul(&g));
        let rhs = poly_gcd(&a, &b).mul(&g.primitive()).primitive();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_laws(x in arb_ratfunc(), y in arb_ratfunc(), z in arb_ratfunc()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        if !y.is_zero() {
            let q = rf_arith(&x, &y, RatOp::Div).unwrap();
            prop_assert_eq!(q.mul(&y), x.clone());
        }
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn congruence_reflexive_symmetric(
        x in arb_ratfunc(),
        y in arb_ratfunc(),
        n in prop::sample::select(vec![3u32, 5, 7, 9]),
    ) {
        let m = modulus_build(ModulusKind::Phi2, n).unwrap();
        prop_assert!(congruent_mod(&x, &x, &m).holds);
        let xy = congruent_mod(&x, &y, &m);
        let yx = congruent_mod(&y, &x, &m);
        prop_assert_eq!(xy.holds, yx.holds);
    }

    #[test]
    fn congruence_transitive_and_downward(
        base in arb_ratfunc(),
        s in arb_poly_q(),
        t in arb_poly_q(),
        n in prop::sample::select(vec![3u32, 5, 7]),
    ) {
        // Construct A ≡ B ≡ C (mod Φ_n³) by adding multiples of Φ_n³; the
        // pairwise differences have polynomial (hence coprime) denominators.
        let phi3 = RatFunc::from_poly(cyclotomic(n).pow(3));
        let m3 = modulus_build(ModulusKind::Phi3, n).unwrap();
        let m2 = modulus_build(ModulusKind::Phi2, n).unwrap();
        let a = base.clone();
        let b = base.add(&phi3.mul(&RatFunc::from_poly(s)));
        let c = base.add(&phi3.mul(&RatFunc::from_poly(t)));
        let ab = congruent_mod(&a, &b, &m3);
        let bc = congruent_mod(&b, &c, &m3);
        let ac = congruent_mod(&a, &c, &m3);
        prop_assert!(ab.holds && bc.holds && ac.holds);
        // downward closure: congruence mod Φ_n³ without denominator warning
        // implies congruence mod Φ_n²
        if ab.warnings.is_empty() {
            prop_assert!(congruent_mod(&a, &b, &m2).holds);
        }
    }
}
