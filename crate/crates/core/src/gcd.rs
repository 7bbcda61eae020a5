//! Polynomial GCD via subresultant polynomial remainder sequences.
//!
//! Multivariate inputs are viewed as univariate in one variable over the
//! polynomial ring in the remaining ones (content/primitive-part split, with
//! the content GCD computed recursively). The result is normalized to
//! content-free integer coefficients with positive leading coefficient in
//! graded-lex order, so it is a canonical representative.

use crate::poly::{Exp, MPoly, Var};
use crate::zp::may_divide;

/// GCD of two polynomials, at least one nonzero. Normalized as above.
pub fn poly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }

    // Common monomial factor q^i a^j b^k.
    let mono_a = monomial_content(a);
    let mono_b = monomial_content(b);
    let common = Exp {
        q: mono_a.q.min(mono_b.q),
        a: mono_a.a.min(mono_b.a),
        b: mono_a.b.min(mono_b.b),
    };
    let a = strip_monomial(a, &mono_a);
    let b = strip_monomial(b, &mono_b);
    let mono = MPoly::term(common, num_traits::One::one());

    let ap = a.primitive();
    let bp = b.primitive();
    if ap == bp {
        return mono.mul(&ap);
    }
    // Divisibility fast paths cover the common reduce-loop shapes.
    if ap.total_degree() >= bp.total_degree() && may_divide(&ap, &bp) && ap.exact_div(&bp).is_ok() {
        return mono.mul(&bp);
    }
    if bp.total_degree() > ap.total_degree() && may_divide(&bp, &ap) && bp.exact_div(&ap).is_ok() {
        return mono.mul(&ap);
    }

    let vars_a = ap.variables();
    let vars_b = bp.variables();
    let common_vars: Vec<Var> = vars_a
        .iter()
        .copied()
        .filter(|v| vars_b.contains(v))
        .collect();
    if ap.is_constant() || bp.is_constant() || common_vars.is_empty() {
        // After monomial stripping, disjoint variable sets (or a unit) force a
        // trivial polynomial gcd.
        return mono;
    }
    let main = common_vars
        .iter()
        .copied()
        .min_by_key(|&v| ap.degree_in(v).min(bp.degree_in(v)))
        .expect("nonempty");

    let g = gcd_in_main_var(&ap, &bp, main);
    mono.mul(&g).primitive()
}

fn monomial_content(p: &MPoly) -> Exp {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero").0;
    it.fold(first, |acc, (e, _)| Exp {
        q: acc.q.min(e.q),
        a: acc.a.min(e.a),
        b: acc.b.min(e.b),
    })
}

fn strip_monomial(p: &MPoly, m: &Exp) -> MPoly {
    if *m == Exp::ZERO {
        return p.clone();
    }
    MPoly::from_terms(p.terms().iter().map(|(e, c)| {
        (
            Exp {
                q: e.q - m.q,
                a: e.a - m.a,
                b: e.b - m.b,
            },
            c.clone(),
        )
    }))
}

/// Dense coefficient list of `p` in the main variable; index = degree.
fn to_unipoly(p: &MPoly, v: Var) -> Vec<MPoly> {
    let deg = p.degree_in(v) as usize;
    let mut coeffs = vec![MPoly::zero(); deg + 1];
    for (e, c) in p.terms() {
        let d = e.get(v) as usize;
        let mut rest = *e;
        match v {
            Var::Q => rest.q = 0,
            Var::A => rest.a = 0,
            Var::B => rest.b = 0,
        }
        coeffs[d] = coeffs[d].add(&MPoly::term(rest, c.clone()));
    }
    coeffs
}

fn from_unipoly(coeffs: &[MPoly], v: Var) -> MPoly {
    let mut acc = MPoly::zero();
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let shift = match v {
            Var::Q => Exp::new(d as u32, 0, 0),
            Var::A => Exp::new(0, d as u16, 0),
            Var::B => Exp::new(0, 0, d as u16),
        };
        acc = acc.add(&c.mul_term(&shift, &num_traits::One::one()));
    }
    acc
}

fn uni_degree(coeffs: &[MPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

fn uni_trim(coeffs: &mut Vec<MPoly>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Content of a coefficient list: gcd of the nonzero coefficients.
fn uni_content(coeffs: &[MPoly]) -> MPoly {
    let mut acc: Option<MPoly> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = Some(match acc {
            None => c.primitive(),
            Some(g) => {
                if g.is_one() {
                    return g;
                }
                poly_gcd(&g, c)
            }
        });
    }
    acc.expect("nonzero polynomial")
}

fn uni_divide_coeffs(coeffs: &mut [MPoly], d: &MPoly) {
    if d.is_one() {
        return;
    }
    for c in coeffs.iter_mut() {
        if !c.is_zero() {
            *c = c.exact_div(d).expect("exact coefficient division in PRS");
        }
    }
}

/// Pseudo-remainder prem(A, B) = lc(B)^(deg A - deg B + 1) * A mod B.
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = uni_degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r: Vec<MPoly> = a.to_vec();
    let da = uni_degree(&r).expect("nonzero dividend");
    let mut e = (da - db + 1) as i64;
    while let Some(dr) = uni_degree(&r) {
        if dr < db {
            break;
        }
        let t = r[dr].clone();
        // r <- lc(b)*r - t * x^(dr-db) * b
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(lb);
            }
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            r[i + shift] = r[i + shift].sub(&t.mul(bc));
        }
        uni_trim(&mut r);
        e -= 1;
    }
    // Scale so the result is exactly lc(b)^(delta+1) * a mod b.
    for _ in 0..e {
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(lb);
            }
        }
    }
    r
}

/// One plain division step over the rationals, used to knock a huge degree
/// gap down before starting the PRS (pseudo-remainders would otherwise scale
/// by lc^gap).
fn rational_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = uni_degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r: Vec<MPoly> = a.to_vec();
    while let Some(dr) = uni_degree(&r) {
        if dr < db {
            break;
        }
        let t = r[dr]
            .exact_div(lb)
            .expect("leading coefficient division over constants");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            r[i + shift] = r[i + shift].sub(&t.mul(bc));
        }
        uni_trim(&mut r);
    }
    r
}

fn gcd_in_main_var(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut fa = to_unipoly(a, v);
    let mut fb = to_unipoly(b, v);
    if uni_degree(&fa) < uni_degree(&fb) {
        std::mem::swap(&mut fa, &mut fb);
    }

    let cont_a = uni_content(&fa);
    let cont_b = uni_content(&fb);
    let cont_gcd = poly_gcd(&cont_a, &cont_b);
    uni_divide_coeffs(&mut fa, &cont_a);
    uni_divide_coeffs(&mut fb, &cont_b);

    // With constant coefficients and a big degree gap, take one cheap
    // rational remainder first.
    let constant_coeffs = fb.iter().all(|c| c.is_constant());
    if constant_coeffs {
        let da = uni_degree(&fa).expect("nonzero");
        let db = uni_degree(&fb).expect("nonzero");
        if da - db > 32 {
            let r = rational_rem(&fa, &fb);
            if r.is_empty() {
                return cont_gcd.mul(&from_unipoly(&fb, v).primitive());
            }
            fa = fb;
            fb = to_unipoly(&from_unipoly(&r, v).primitive(), v);
        }
    }

    // Subresultant PRS; fa, fb stay nonzero with deg fa >= deg fb.
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    let mut prim = loop {
        let da = uni_degree(&fa).expect("nonzero");
        let db = uni_degree(&fb).expect("nonzero");
        if db == 0 {
            break vec![MPoly::one()];
        }
        let delta = (da - db) as u32;
        let mut r = pseudo_rem(&fa, &fb);
        if r.is_empty() {
            break fb;
        }
        if uni_degree(&r) == Some(0) {
            break vec![MPoly::one()];
        }
        let divisor = g.mul(&h.pow(delta));
        uni_divide_coeffs(&mut r, &divisor);
        g = fb[db].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .exact_div(&h.pow(d - 1))
                .expect("subresultant h update"),
        };
        fa = std::mem::replace(&mut fb, r);
    };

    let content = uni_content(&prim);
    uni_divide_coeffs(&mut prim, &content);
    cont_gcd.mul(&from_unipoly(&prim, v))
}
