//! Reduced rational functions over the polynomial ring in q, a, b.
//!
//! A `RatFunc` is a numerator polynomial (carrying all rational content) over
//! a denominator kept in factored form. Every denominator factor a library
//! constructor introduces is irreducible by construction — cyclotomic
//! polynomials, plain variables, and factors linear in a or b — so reduction
//! is trial division factor by factor (with a mod-p pre-check) instead of one
//! large GCD. Denominators arriving from arbitrary callers enter as "opaque"
//! factors and are reduced with the generic GCD, splitting as needed.
//!
//! The reduced invariants are those of the congruence predicate: denominator
//! nonzero, content-free with integer coefficients and positive leading
//! coefficient in graded-lex order, coprime to the numerator; zero is 0/1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{self, Coefficient};
use crate::cyclotomic::{cyclotomic, one_minus_q_pow_factors, one_plus_q_pow_factors};
use crate::error::CongruenceError;
use crate::gcd::poly_gcd;
use crate::poly::MPoly;
use crate::qkit::SignedMonomial;
use crate::zp::may_divide;

/// Product of normalized non-constant factors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Factored {
    map: BTreeMap<FactorKey, FactorInfo>,
}

/// BTreeMap key wrapper ordering factors by (total degree, terms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FactorKey(pub MPoly);

impl PartialOrd for FactorKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FactorKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .total_degree()
            .cmp(&other.0.total_degree())
            .then_with(|| {
                let lhs = self.0.terms();
                let rhs = other.0.terms();
                lhs.len().cmp(&rhs.len()).then_with(|| {
                    for ((ea, ca), (eb, cb)) in lhs.iter().zip(rhs.iter()) {
                        let c = ea.cmp(eb).then_with(|| ca.cmp(cb));
                        if c != std::cmp::Ordering::Equal {
                            return c;
                        }
                    }
                    std::cmp::Ordering::Equal
                })
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct FactorInfo {
    mult: u32,
    irreducible: bool,
}

impl Factored {
    pub fn one() -> Self {
        Factored::default()
    }

    pub fn is_one(&self) -> bool {
        self.map.is_empty()
    }

    /// Inserts `prim^mult`; `prim` must already be normalized (primitive,
    /// integer, positive leading coefficient) and non-constant.
    fn insert_normalized(&mut self, prim: MPoly, mult: u32, irreducible: bool) {
        if mult == 0 {
            return;
        }
        debug_assert!(!prim.is_constant());
        let entry = self
            .map
            .entry(FactorKey(prim))
            .or_insert(FactorInfo { mult: 0, irreducible });
        entry.mult += mult;
        // A factor known irreducible from one source stays irreducible.
        entry.irreducible |= irreducible;
    }

    /// Inserts an arbitrary factor, returning the content adjustment c such
    /// that factor^mult = c * (normalized^mult). Callers dividing by the
    /// factor must divide their numerator by c.
    fn insert(&mut self, factor: &MPoly, mult: u32, irreducible: bool) -> Coefficient {
        assert!(!factor.is_zero(), "zero denominator factor");
        let (content, prim) = factor.primitive_parts();
        if !prim.is_one() {
            self.insert_normalized(prim, mult, irreducible);
        }
        coeff::pow(&content, mult)
    }

    pub fn mul(&mut self, other: &Factored) {
        for (k, info) in &other.map {
            self.insert_normalized(k.0.clone(), info.mult, info.irreducible);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MPoly, u32, bool)> {
        self.map.iter().map(|(k, i)| (&k.0, i.mult, i.irreducible))
    }

    /// Per-factor minimum with `other`.
    fn common(&self, other: &Factored) -> Factored {
        let mut out = Factored::one();
        for (k, info) in &self.map {
            if let Some(o) = other.map.get(k) {
                out.insert_normalized(k.0.clone(), info.mult.min(o.mult), info.irreducible);
            }
        }
        out
    }

    /// Factors of `self` beyond `sub` (per-factor multiplicity difference).
    fn minus(&self, sub: &Factored) -> Factored {
        let mut out = Factored::one();
        for (k, info) in &self.map {
            let m = info.mult - sub.map.get(k).map(|o| o.mult).unwrap_or(0);
            out.insert_normalized(k.0.clone(), m, info.irreducible);
        }
        out
    }

    /// Per-factor maximum (the least common multiple).
    fn lcm(&self, other: &Factored) -> Factored {
        let mut out = self.clone();
        for (k, info) in &other.map {
            let have = out.map.get(k).map(|i| i.mult).unwrap_or(0);
            if info.mult > have {
                out.insert_normalized(k.0.clone(), info.mult - have, info.irreducible);
            }
        }
        out
    }

    pub fn expand(&self) -> MPoly {
        if self.map.is_empty() {
            return MPoly::one();
        }
        // Factors are primitive integer polynomials; in the univariate case
        // the product is accumulated densely over integers.
        if self.map.keys().all(|k| k.0.is_univariate_q()) {
            return MPoly::product_dense_int_q(self.map.iter().flat_map(|(k, info)| {
                std::iter::repeat(&k.0).take(info.mult as usize)
            }));
        }
        let mut acc = MPoly::one();
        for (k, info) in &self.map {
            for _ in 0..info.mult {
                acc = acc.mul(&k.0);
            }
        }
        acc
    }

}

/// Reduced rational function.
#[derive(Clone)]
pub struct RatFunc {
    num: MPoly,
    den: Factored,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: Factored::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: MPoly::one(),
            den: Factored::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: Factored::one(),
        }
    }

    pub fn from_coeff(c: Coefficient) -> Self {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub(crate) fn from_parts_reduced(num: MPoly, den: Factored) -> Self {
        let (num, den) = reduce(num, den);
        RatFunc { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    /// The denominator, expanded to a polynomial.
    pub fn den(&self) -> MPoly {
        self.den.expand()
    }

    pub(crate) fn den_factors(&self) -> &Factored {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let mut acc = RatSum::new();
        acc.add_parts(self.num.clone(), &self.den);
        acc.add_parts(other.num.clone(), &other.den);
        acc.finish()
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.num);
        let mut den = self.den.clone();
        den.mul(&other.den);
        RatFunc::from_parts_reduced(num, den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, CongruenceError> {
        if other.is_zero() {
            return Err(CongruenceError::DivisionByZero);
        }
        let num = self.num.mul(&other.den.expand());
        let mut den = self.den.clone();
        let (content, prim) = other.num.primitive_parts();
        if !prim.is_one() {
            den.insert_normalized(prim, 1, false);
        }
        let num = num.scale(&(Coefficient::one() / content));
        Ok(RatFunc::from_parts_reduced(num, den))
    }

    /// Exact evaluation at rational points; fails if the denominator
    /// vanishes there.
    pub fn eval(
        &self,
        at_q: &Coefficient,
        at_a: &Coefficient,
        at_b: &Coefficient,
    ) -> Option<Coefficient> {
        let den = self.den.expand().eval(at_q, at_a, at_b);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(at_q, at_a, at_b) / den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.num != other.num {
            return false;
        }
        if self.den == other.den {
            return true;
        }
        // Equal reduced fractions with differently-grouped factorings.
        self.den.expand() == other.den.expand()
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den.expand())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The four field operations of `rf_arith`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Builds the reduced, normalized representative of num/den.
pub fn rf_make(num: &MPoly, den: &MPoly) -> Result<RatFunc, CongruenceError> {
    if den.is_zero() {
        return Err(CongruenceError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    let g = poly_gcd(num, den);
    let num = num.exact_div(&g).expect("gcd divides numerator");
    let den = den.exact_div(&g).expect("gcd divides denominator");
    let (content, prim) = den.primitive_parts();
    let num = num.scale(&(Coefficient::one() / content));
    let mut factors = Factored::one();
    if !prim.is_one() {
        factors.insert_normalized(prim, 1, false);
    }
    // gcd(num, den) = 1 already; no further reduction needed.
    Ok(RatFunc { num, den: factors })
}

/// Exact field arithmetic on reduced rational functions.
pub fn rf_arith(x: &RatFunc, y: &RatFunc, op: RatOp) -> Result<RatFunc, CongruenceError> {
    match op {
        RatOp::Add => Ok(x.add(y)),
        RatOp::Sub => Ok(x.sub(y)),
        RatOp::Mul => Ok(x.mul(y)),
        RatOp::Div => x.div(y),
    }
}

/// Cancels every common factor between `num` and the factored denominator.
/// The numerator is split into rational content and integer primitive part
/// once; all cancellations run on the primitive part (factors are primitive,
/// so quotients stay primitive and no content passes are needed inside the
/// loop).
fn reduce(num: MPoly, den: Factored) -> (MPoly, Factored) {
    if num.is_zero() {
        return (MPoly::zero(), Factored::one());
    }
    let (content, mut prim) = num.primitive_parts();
    let mut queue: Vec<(MPoly, u32, bool)> = den
        .map
        .into_iter()
        .map(|(k, i)| (k.0, i.mult, i.irreducible))
        .collect();
    // Largest factors last in the vec, popped first: big cancellations
    // shrink the numerator early.
    queue.sort_by_key(|(f, _, _)| f.total_degree());
    let mut out = Factored::one();
    while let Some((f, mult, irreducible)) = queue.pop() {
        if irreducible {
            let mut m = mult;
            while m > 0 && !prim.is_constant() && may_divide(&prim, &f) {
                match prim.exact_div_primitive(&f) {
                    Some(q) => {
                        prim = q;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m > 0 {
                out.insert_normalized(f, m, true);
            }
        } else {
            if prim.is_constant() {
                out.insert_normalized(f, mult, false);
                continue;
            }
            let g = poly_gcd(&prim, &f);
            if g.is_constant() {
                out.insert_normalized(f, mult, false);
            } else if g == f {
                prim = prim.exact_div_primitive(&f).expect("gcd divides");
                if mult > 1 {
                    queue.push((f, mult - 1, false));
                }
            } else {
                prim = prim.exact_div_primitive(&g).expect("gcd divides numerator");
                let rest = f.exact_div(&g).expect("gcd divides factor").primitive();
                if !rest.is_constant() {
                    queue.push((rest, 1, false));
                }
                if mult > 1 {
                    queue.push((f, mult - 1, false));
                }
            }
        }
    }
    (prim.scale(&content), out)
}

/// Incremental sum of rational functions over a running common denominator.
/// Terms are accumulated unreduced; `finish` performs the single final
/// reduction. This is the workhorse behind every q-series summation.
pub(crate) struct RatSum {
    num: MPoly,
    den: Factored,
}

impl RatSum {
    pub fn new() -> Self {
        RatSum {
            num: MPoly::zero(),
            den: Factored::one(),
        }
    }

    pub fn add_ratfunc(&mut self, t: &RatFunc) {
        self.add_parts(t.num.clone(), &t.den);
    }

    pub(crate) fn add_parts(&mut self, term_num: MPoly, term_den: &Factored) {
        let common = self.den.common(term_den);
        let mut lhs = std::mem::take(&mut self.num);
        if !lhs.is_zero() {
            let self_extra = term_den.minus(&common);
            if !self_extra.is_one() {
                lhs = lhs.mul(&self_extra.expand());
            }
        }
        let mut rhs = term_num;
        if !rhs.is_zero() {
            let term_extra = self.den.minus(&common);
            if !term_extra.is_one() {
                rhs = rhs.mul(&term_extra.expand());
            }
        }
        self.num = lhs.add(&rhs);
        self.den = self.den.lcm(term_den);
    }

    pub fn finish(self) -> RatFunc {
        RatFunc::from_parts_reduced(self.num, self.den)
    }
}

/// Builder for a single product term: a rational coefficient, a signed power
/// of q, numerator polynomials, and factored denominator parts.
#[derive(Clone)]
pub(crate) struct TermBuilder {
    coef: Coefficient,
    q_shift: i64,
    num: MPoly,
    den: Factored,
}

impl TermBuilder {
    pub fn new() -> Self {
        TermBuilder {
            coef: Coefficient::one(),
            q_shift: 0,
            num: MPoly::one(),
            den: Factored::one(),
        }
    }

    pub fn coef(mut self, c: &Coefficient) -> Self {
        self.coef *= c;
        self
    }

    /// Multiplies by (-1)^k.
    pub fn sign(mut self, k: u64) -> Self {
        if k % 2 == 1 {
            self.coef = -self.coef;
        }
        self
    }

    /// Multiplies by q^e (e may be negative).
    pub fn q_power(mut self, e: i64) -> Self {
        self.q_shift += e;
        self
    }

    pub fn num_poly(mut self, p: &MPoly) -> Self {
        self.num = self.num.mul(p);
        self
    }

    /// Multiplies the numerator by (base q-Pochhammer), expanded.
    pub fn num_poch(self, base: SignedMonomial, step: u32, count: i64) -> Self {
        assert!(count >= 0);
        let p = crate::qkit::q_pochhammer(base, step, count);
        self.num_poly(&p)
    }

    /// Divides by an arbitrary normalized-on-insert factor.
    pub fn den_factor(mut self, factor: &MPoly, mult: u32, irreducible: bool) -> Self {
        let content = self.den.insert(factor, mult, irreducible);
        self.coef /= content;
        self
    }

    /// Divides by (1 - q^m)^mult via the cyclotomic factorization.
    pub fn den_one_minus_q_pow(mut self, m: u32, mult: u32) -> Self {
        assert!(m >= 1);
        for d in one_minus_q_pow_factors(m) {
            self.den.insert_normalized(cyclotomic(d).as_ref().clone(), mult, true);
        }
        // (1 - q^m) = -(q^m - 1)
        if mult % 2 == 1 {
            self.coef = -self.coef;
        }
        self
    }

    /// Divides by (1 + q^m)^mult via cyclotomics of index 2m.
    pub fn den_one_plus_q_pow(mut self, m: u32, mult: u32) -> Self {
        assert!(m >= 1);
        for d in one_plus_q_pow_factors(m) {
            self.den.insert_normalized(cyclotomic(d).as_ref().clone(), mult, true);
        }
        self
    }

    /// Divides by the q-integer [m]^mult, m >= 1.
    pub fn den_q_int(mut self, m: u32, mult: u32) -> Self {
        assert!(m >= 1);
        for d in one_minus_q_pow_factors(m) {
            if d > 1 {
                self.den.insert_normalized(cyclotomic(d).as_ref().clone(), mult, true);
            }
        }
        self
    }

    /// Divides by (q^start; q^step)_count, all factors decomposed into
    /// cyclotomics.
    pub fn den_poch_q(mut self, start: u32, step: u32, count: i64) -> Self {
        assert!(count >= 0);
        for j in 0..count as u32 {
            self = self.den_one_minus_q_pow(start + j * step, 1);
        }
        self
    }

    /// Divides by (-q^start; q^step)_count.
    pub fn den_poch_neg_q(mut self, start: u32, step: u32, count: i64) -> Self {
        assert!(count >= 0);
        for j in 0..count as u32 {
            self = self.den_one_plus_q_pow(start + j * step, 1);
        }
        self
    }

    pub fn build(self) -> RatFunc {
        let TermBuilder {
            coef,
            q_shift,
            num,
            mut den,
        } = self;
        let mut num = num.scale(&coef);
        if q_shift >= 0 {
            num = num.mul(&MPoly::q_pow(q_shift.try_into().expect("q shift overflow")));
        } else {
            den.insert_normalized(
                MPoly::q_pow((-q_shift).try_into().expect("q shift overflow")),
                1,
                true,
            );
        }
        RatFunc::from_parts_reduced(num, den)
    }

    /// Builds without the final reduction; used when the term feeds straight
    /// into a `RatSum`.
    pub fn build_unreduced(self) -> (MPoly, Factored) {
        let TermBuilder {
            coef,
            q_shift,
            num,
            mut den,
        } = self;
        let mut num = num.scale(&coef);
        if q_shift >= 0 {
            num = num.mul(&MPoly::q_pow(q_shift.try_into().expect("q shift overflow")));
        } else {
            den.insert_normalized(
                MPoly::q_pow((-q_shift).try_into().expect("q shift overflow")),
                1,
                true,
            );
        }
        (num, den)
    }
}
