//! Sparse multivariate polynomials in q, a, b over exact rationals.
//!
//! `MPoly` is the carrier for every polynomial quantity in the crate:
//! q-integers, cyclotomic polynomials, q-Pochhammer products, q-binomial
//! coefficients and the moduli built from them. Terms are kept in a vector
//! sorted ascending by graded-lexicographic order on (e_q, e_a, e_b), with no
//! zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{self, Coefficient};
use crate::error::PolyError;

/// The three ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::A, Var::B];

    pub fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::A => 'a',
            Var::B => 'b',
        }
    }
}

/// Exponent triple of a single term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exp {
    pub q: u32,
    pub a: u16,
    pub b: u16,
}

impl Exp {
    pub const ZERO: Exp = Exp { q: 0, a: 0, b: 0 };

    pub fn new(q: u32, a: u16, b: u16) -> Self {
        Exp { q, a, b }
    }

    pub fn grade(&self) -> u64 {
        self.q as u64 + self.a as u64 + self.b as u64
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::Q => self.q,
            Var::A => self.a as u32,
            Var::B => self.b as u32,
        }
    }

    fn checked_add(&self, other: &Exp) -> Option<Exp> {
        Some(Exp {
            q: self.q.checked_add(other.q)?,
            a: self.a.checked_add(other.a)?,
            b: self.b.checked_add(other.b)?,
        })
    }

    fn checked_sub(&self, other: &Exp) -> Option<Exp> {
        Some(Exp {
            q: self.q.checked_sub(other.q)?,
            a: self.a.checked_sub(other.a)?,
            b: self.b.checked_sub(other.b)?,
        })
    }

    fn pack(&self) -> u64 {
        ((self.q as u64) << 32) | ((self.a as u64) << 16) | self.b as u64
    }

    fn unpack(key: u64) -> Exp {
        Exp {
            q: (key >> 32) as u32,
            a: ((key >> 16) & 0xFFFF) as u16,
            b: (key & 0xFFFF) as u16,
        }
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.q.cmp(&other.q))
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
    }
}

/// Guard against runaway exponents in large sweeps. Operations that build
/// polynomials can be checked against a budget and report an error instead of
/// wrapping silently; the bounds are generous for everything the suite runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentBudget {
    pub max_degree_q: u32,
    pub max_degree_a: u16,
    pub max_degree_b: u16,
}

impl Default for ExponentBudget {
    fn default() -> Self {
        ExponentBudget {
            max_degree_q: 1 << 24,
            max_degree_a: 1 << 14,
            max_degree_b: 1 << 14,
        }
    }
}

impl ExponentBudget {
    pub fn new(max_degree_q: u32, max_degree_a: u16, max_degree_b: u16) -> Self {
        assert!(max_degree_q > 0 && max_degree_a > 0 && max_degree_b > 0);
        ExponentBudget {
            max_degree_q,
            max_degree_a,
            max_degree_b,
        }
    }

    pub fn admits(&self, poly: &MPoly) -> Result<(), PolyError> {
        for (e, _) in &poly.terms {
            if e.q > self.max_degree_q {
                return Err(PolyError::ExponentBudget {
                    var: 'q',
                    value: e.q as u64,
                    max: self.max_degree_q as u64,
                });
            }
            if e.a > self.max_degree_a {
                return Err(PolyError::ExponentBudget {
                    var: 'a',
                    value: e.a as u64,
                    max: self.max_degree_a as u64,
                });
            }
            if e.b > self.max_degree_b {
                return Err(PolyError::ExponentBudget {
                    var: 'b',
                    value: e.b as u64,
                    max: self.max_degree_b as u64,
                });
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in q, a, b with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    /// Nonzero terms, ascending in graded-lex order.
    terms: Vec<(Exp, Coefficient)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(Exp::ZERO, c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(coeff::int(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial_pow(v, 1, Coefficient::one())
    }

    /// `c * v^e`.
    pub fn monomial_pow(v: Var, e: u32, c: Coefficient) -> Self {
        let exp = match v {
            Var::Q => Exp::new(e, 0, 0),
            Var::A => Exp::new(0, e.try_into().expect("a-exponent overflow"), 0),
            Var::B => Exp::new(0, 0, e.try_into().expect("b-exponent overflow")),
        };
        MPoly::term(exp, c)
    }

    /// `c * q^eq * a^ea * b^eb`.
    pub fn term(exp: Exp, c: Coefficient) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: u32) -> Self {
        MPoly::term(Exp::new(e, 0, 0), Coefficient::one())
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Exp, Coefficient)>) -> Self {
        let mut map: BTreeMap<Exp, Coefficient> = BTreeMap::new();
        for (e, c) in pairs {
            if c.is_zero() {
                continue;
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        MPoly {
            terms: map.into_iter().collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exp::ZERO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(e, _)| *e == Exp::ZERO)
    }

    /// The leading (greatest graded-lex) term.
    pub fn leading(&self) -> Option<(&Exp, &Coefficient)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.last().map(|(e, _)| e.grade()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e.get(v)).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.iter().any(|(e, _)| e.get(v) > 0))
            .collect()
    }

    pub fn coefficient(&self, exp: &Exp) -> Coefficient {
        match self.terms.binary_search_by(|(e, _)| e.cmp(exp)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coefficient::zero(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> MPoly {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, s: &Coefficient) -> MPoly {
        if s.is_zero() {
            return MPoly::zero();
        }
        self.map_coefficients(|c| c * s)
    }

    /// Multiply by a single monomial `c * x^exp`.
    pub fn mul_term(&self, exp: &Exp, c: &Coefficient) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    (
                        e.checked_add(exp).expect("exponent overflow in mul_term"),
                        k * c,
                    )
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { terms: out }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.checked_mul(other).expect("exponent overflow in mul")
    }

    /// Multiplication with an explicit overflow check on exponents.
    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(MPoly::zero());
        }
        // Iterate the smaller operand on the outside.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (e, c) = &small.terms[0];
            return Ok(large.mul_term(e, c));
        }
        // Dense convolution pays off for the dense univariate polynomials the
        // q-series sums produce.
        if small.is_univariate_q() && large.is_univariate_q() {
            let ds = small.degree_in(Var::Q) as usize;
            let dl = large.degree_in(Var::Q) as usize;
            let dense_enough = (ds + 1) <= 4 * small.terms.len() + 4
                && (dl + 1) <= 4 * large.terms.len() + 4;
            if dense_enough && ds + dl < (1 << 22) {
                let (ca, pa) = small.primitive_parts();
                let (cb, pb) = large.primitive_parts();
                let a = pa.to_dense_int_q();
                let b = pb.to_dense_int_q();
                let mut out = vec![BigInt::zero(); ds + dl + 1];
                for (i, ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (j, bj) in b.iter().enumerate() {
                        if !bj.is_zero() {
                            out[i + j] += ai * bj;
                        }
                    }
                }
                let scale = ca * cb;
                return Ok(MPoly {
                    terms: out
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| {
                            (Exp::new(i as u32, 0, 0), Coefficient::from_integer(c) * &scale)
                        })
                        .collect(),
                });
            }
        }
        // Sparse multivariate product, accumulated over integers with the
        // rational content split off once.
        let (ca, pa) = small.primitive_parts();
        let (cb, pb) = large.primitive_parts();
        let scale = ca * cb;
        let int_terms = |p: &MPoly| -> Vec<(Exp, BigInt)> {
            p.terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!(c.is_integer());
                    (*e, c.to_integer())
                })
                .collect()
        };
        let sa = int_terms(&pa);
        let sb = int_terms(&pb);
        let mut acc: HashMap<u64, BigInt> = HashMap::with_capacity(sa.len() + sb.len());
        for (es, cs) in &sa {
            for (el, cl) in &sb {
                let e = es.checked_add(el).ok_or(PolyError::ExponentBudget {
                    var: 'q',
                    value: es.q as u64 + el.q as u64,
                    max: u32::MAX as u64,
                })?;
                let prod = cs * cl;
                match acc.entry(e.pack()) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += prod;
                    }
                }
            }
        }
        let mut terms: Vec<(Exp, BigInt)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Exp::unpack(k), c))
            .collect();
        terms.sort_unstable_by(|(x, _), (y, _)| x.cmp(y));
        let one = scale.is_one();
        Ok(MPoly {
            terms: terms
                .into_iter()
                .map(|(e, c)| {
                    let c = Coefficient::from_integer(c);
                    (e, if one { c } else { c * &scale })
                })
                .collect(),
        })
    }

    /// Multiplication checked against an exponent budget.
    pub fn mul_within(&self, other: &MPoly, budget: &ExponentBudget) -> Result<MPoly, PolyError> {
        let p = self.checked_mul(other)?;
        budget.admits(&p)?;
        Ok(p)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// True when only the variable q occurs.
    pub fn is_univariate_q(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.a == 0 && e.b == 0)
    }

    fn to_dense_int_q(&self) -> Vec<BigInt> {
        // caller guarantees integer coefficients (primitive part)
        let deg = self.degree_in(Var::Q) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            debug_assert!(c.is_integer());
            out[e.q as usize] = c.to_integer();
        }
        out
    }

    /// Dense synthetic division for the univariate-in-q case. Both operands
    /// are split into content and integer primitive part so the inner loop is
    /// pure BigInt arithmetic; a non-exact coefficient division ends the
    /// attempt early.
    fn exact_div_dense_q(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        let da = self.degree_in(Var::Q) as usize;
        let db = divisor.degree_in(Var::Q) as usize;
        if da < db {
            return Err(PolyError::NotDivisible);
        }
        let (content_n, prim_n) = self.primitive_parts();
        let (content_d, prim_d) = divisor.primitive_parts();
        let mut rem = prim_n.to_dense_int_q();
        let div = prim_d.to_dense_int_q();
        let lead = &div[db];
        let lead_is_one = lead.is_one();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (db..=da).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = if lead_is_one {
                std::mem::take(&mut rem[i])
            } else {
                let (c, r) = rem[i].div_rem(lead);
                if !r.is_zero() {
                    return Err(PolyError::NotDivisible);
                }
                c
            };
            let off = i - db;
            for (j, bj) in div.iter().enumerate().take(db) {
                if !bj.is_zero() {
                    rem[off + j] -= &c * bj;
                }
            }
            quot[off] = c;
        }
        if rem[..db].iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        let scale = content_n / content_d;
        Ok(MPoly {
            terms: quot
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Exp::new(i as u32, 0, 0), Coefficient::from_integer(c) * &scale))
                .collect(),
        })
    }

    /// Product of univariate integer polynomials, accumulated densely over
    /// BigInt. Used to expand factored denominators.
    pub(crate) fn product_dense_int_q<'a>(factors: impl Iterator<Item = &'a MPoly>) -> MPoly {
        let mut acc: Vec<BigInt> = vec![BigInt::one()];
        for f in factors {
            debug_assert!(f.is_univariate_q());
            let fv: Vec<(usize, BigInt)> = f
                .terms()
                .iter()
                .map(|(e, c)| {
                    debug_assert!(c.is_integer());
                    (e.q as usize, c.to_integer())
                })
                .collect();
            let fdeg = fv.last().map(|(d, _)| *d).unwrap_or(0);
            let mut next = vec![BigInt::zero(); acc.len() + fdeg];
            for (i, ai) in acc.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (j, cj) in &fv {
                    next[i + j] += ai * cj;
                }
            }
            acc = next;
        }
        MPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Exp::new(i as u32, 0, 0), Coefficient::from_integer(c)))
                .collect(),
        }
    }

    /// Exact division where both operands are already integer-primitive; the
    /// quotient is then integer-primitive too (Gauss), so no content pass is
    /// needed. Used by the rational-function reduction loop.
    pub(crate) fn exact_div_primitive(&self, divisor: &MPoly) -> Option<MPoly> {
        if self.is_univariate_q() && divisor.is_univariate_q() && !divisor.is_constant() {
            let da = self.degree_in(Var::Q) as usize;
            let db = divisor.degree_in(Var::Q) as usize;
            if da < db {
                return None;
            }
            let mut rem = self.to_dense_int_q();
            let div = divisor.to_dense_int_q();
            let lead = &div[db];
            let lead_is_one = lead.is_one();
            let mut quot = vec![BigInt::zero(); da - db + 1];
            for i in (db..=da).rev() {
                if rem[i].is_zero() {
                    continue;
                }
                let c = if lead_is_one {
                    std::mem::take(&mut rem[i])
                } else {
                    let (c, r) = rem[i].div_rem(lead);
                    if !r.is_zero() {
                        return None;
                    }
                    c
                };
                let off = i - db;
                for (j, bj) in div.iter().enumerate().take(db) {
                    if !bj.is_zero() {
                        rem[off + j] -= &c * bj;
                    }
                }
                quot[off] = c;
            }
            if rem[..db].iter().any(|c| !c.is_zero()) {
                return None;
            }
            return Some(MPoly {
                terms: quot
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (Exp::new(i as u32, 0, 0), Coefficient::from_integer(c)))
                    .collect(),
            });
        }
        self.exact_div_int_sparse(divisor)
    }

    /// Sparse exact division over BigInt for integer-primitive multivariate
    /// operands.
    fn exact_div_int_sparse(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (lead_exp, lead_coef) = divisor.leading().expect("nonzero divisor");
        debug_assert!(lead_coef.is_integer());
        let lead: BigInt = lead_coef.to_integer();
        let lead_is_one = lead.is_one();
        let mut rem: BTreeMap<Exp, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| {
                debug_assert!(c.is_integer());
                (*e, c.to_integer())
            })
            .collect();
        let div: Vec<(Exp, BigInt)> = divisor
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(e, c)| (*e, c.to_integer()))
            .collect();
        let mut quotient_rev: Vec<(Exp, BigInt)> = Vec::new();
        while let Some((&r_exp, _)) = rem.iter().next_back() {
            let r_coef = rem.remove(&r_exp).expect("leading remainder term");
            let t_exp = r_exp.checked_sub(lead_exp)?;
            let t_coef = if lead_is_one {
                r_coef
            } else {
                let (c, r) = r_coef.div_rem(&lead);
                if !r.is_zero() {
                    return None;
                }
                c
            };
            for (e, c) in &div {
                let target = e.checked_add(&t_exp).expect("exponent overflow in div");
                let delta = c * &t_coef;
                match rem.entry(target) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient_rev.push((t_exp, t_coef));
        }
        quotient_rev.reverse();
        Some(MPoly {
            terms: quotient_rev
                .into_iter()
                .map(|(e, c)| (e, Coefficient::from_integer(c)))
                .collect(),
        })
    }

    /// Exact division: returns Q with `self = divisor * Q`, or `NotDivisible`.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        if divisor.is_constant() {
            let inv = Coefficient::one() / &divisor.terms[0].1;
            return Ok(self.scale(&inv));
        }
        if self.is_univariate_q() && divisor.is_univariate_q() {
            return self.exact_div_dense_q(divisor);
        }
        let (lead_exp, lead_coef) = divisor.leading().expect("nonzero divisor");
        let mut rem: BTreeMap<Exp, Coefficient> = self.terms.iter().cloned().collect();
        // Quotient terms come out in strictly decreasing order.
        let mut quotient_rev: Vec<(Exp, Coefficient)> = Vec::new();
        while let Some((&r_exp, _)) = rem.iter().next_back() {
            let r_coef = rem.remove(&r_exp).expect("leading remainder term");
            let t_exp = match r_exp.checked_sub(lead_exp) {
                Some(e) => e,
                None => return Err(PolyError::NotDivisible),
            };
            let t_coef = r_coef / lead_coef;
            // Subtract t * divisor from the remainder; the leading term of the
            // product cancels the term just removed.
            for (e, c) in divisor.terms.iter().rev().skip(1) {
                let target = e.checked_add(&t_exp).expect("exponent overflow in div");
                let delta = c * &t_coef;
                match rem.entry(target) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient_rev.push((t_exp, t_coef));
        }
        quotient_rev.reverse();
        Ok(MPoly {
            terms: quotient_rev,
        })
    }

    /// Substitutes a rational constant for one variable, leaving the others
    /// symbolic.
    pub fn substitute(&self, v: Var, value: &Coefficient) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let power = e.get(v);
            let mut rest = *e;
            match v {
                Var::Q => rest.q = 0,
                Var::A => rest.a = 0,
                Var::B => rest.b = 0,
            }
            (rest, c * coeff::pow(value, power))
        }))
    }

    /// Exact evaluation at rational points.
    pub fn eval(&self, at_q: &Coefficient, at_a: &Coefficient, at_b: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            if e.q > 0 {
                t *= coeff::pow(at_q, e.q);
            }
            if e.a > 0 {
                t *= coeff::pow(at_a, e.a as u32);
            }
            if e.b > 0 {
                t *= coeff::pow(at_b, e.b as u32);
            }
            acc += t;
        }
        acc
    }

    /// Evaluation in the single variable q (a and b set to 0).
    pub fn eval_q(&self, at_q: &Coefficient) -> Coefficient {
        self.eval(at_q, &Coefficient::zero(), &Coefficient::zero())
    }

    /// Splits into rational content and primitive part: `self = content * prim`
    /// where `prim` has coprime integer coefficients and positive leading
    /// coefficient. The zero polynomial returns (0, 0).
    pub fn primitive_parts(&self) -> (Coefficient, MPoly) {
        if self.is_zero() {
            return (Coefficient::zero(), MPoly::zero());
        }
        let mut denom_lcm = BigInt::one();
        for (_, c) in &self.terms {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        // numer_gcd > 0 since the polynomial is nonzero
        let mut content = Coefficient::new(numer_gcd, denom_lcm);
        if self.terms.last().expect("nonzero").1.is_negative() {
            content = -content;
        }
        let inv = Coefficient::one() / &content;
        (content, self.scale(&inv))
    }

    /// Primitive part alone (integer, content-free, positive leading
    /// coefficient).
    pub fn primitive(&self) -> MPoly {
        self.primitive_parts().1
    }

    /// Sparse records [numerator, denominator, e_q, e_a, e_b] in graded-lex
    /// order; the wire format for polynomials in JSON reports and fixtures.
    pub fn to_records(&self) -> Vec<(String, String, u32, u16, u16)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                (
                    c.numer().to_string(),
                    c.denom().to_string(),
                    e.q,
                    e.a,
                    e.b,
                )
            })
            .collect()
    }

    pub fn from_records(
        records: &[(String, String, u32, u16, u16)],
    ) -> Result<MPoly, num_bigint::ParseBigIntError> {
        let mut pairs = Vec::with_capacity(records.len());
        for (n, d, eq, ea, eb) in records {
            let n: BigInt = n.parse()?;
            let d: BigInt = d.parse()?;
            pairs.push((Exp::new(*eq, *ea, *eb), Coefficient::new(n, d)));
        }
        Ok(MPoly::from_terms(pairs))
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<(String, String, u32, u16, u16)>::deserialize(deserializer)?;
        MPoly::from_records(&records).map_err(|e| D::Error::custom(format!("bad bigint: {e}")))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = [(Var::Q, e.q), (Var::A, e.a as u32), (Var::B, e.b as u32)]
                .iter()
                .filter(|(_, p)| *p > 0)
                .map(|(v, p)| {
                    if *p == 1 {
                        v.symbol().to_string()
                    } else {
                        format!("{}^{}", v.symbol(), p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
