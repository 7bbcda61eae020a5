//! Exact verification of q-supercongruences and their classical counterparts.
//!
//! The crate provides:
//!
//! - sparse multivariate polynomial arithmetic in q, a, b over exact
//!   rationals, with cyclotomic polynomial generation, exact division and GCD
//!   ([`poly`], [`cyclotomic`], [`gcd`]);
//! - q-combinatorial constructors: q-integers, q-Pochhammer symbols, Gaussian
//!   binomial coefficients, Euler numbers ([`qkit`]);
//! - reduced rational functions and the congruence predicate, both for
//!   polynomial moduli (powers of cyclotomics, parametric moduli in a) and
//!   for prime powers ([`ratfunc`], [`congruence`]);
//! - the two q-WZ pairs with their pair relations and telescoping identities
//!   ([`wz`]);
//! - a registry of verifiable statements with batch range verification
//!   ([`suite`]).

pub mod coeff;
pub mod congruence;
pub mod cyclotomic;
pub mod error;
pub mod gcd;
pub mod poly;
pub mod qkit;
pub mod ratfunc;
pub mod suite;
pub mod wz;
mod zp;

pub use coeff::Coefficient;
pub use congruence::{
    congruent_mod, modulus_build, padic_congruent, CongruenceOutcome, Modulus, ModulusKind,
    PadicModulus, Warning,
};
pub use error::{CongruenceError, PolyError, QkitError, SuiteError};
pub use gcd::poly_gcd;
pub use poly::{Exp, ExponentBudget, MPoly, Var};
pub use ratfunc::{rf_arith, rf_make, RatFunc, RatOp};
