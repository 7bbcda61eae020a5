//! Error types shared across the crate.

use thiserror::Error;

/// Errors from polynomial-ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Exact division was requested but no exact quotient exists.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    /// An exponent would exceed the configured budget.
    #[error("exponent exceeds budget for variable {var}: {value} > {max}")]
    ExponentBudget { var: char, value: u64, max: u64 },
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    ZeroDivisor,
}

/// Errors from q-kit constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QkitError {
    /// Euler numbers of odd index are zero by convention; the table refuses
    /// to look them up rather than guess the caller's intent.
    #[error("Euler number requested at odd index {0}")]
    OddIndex(u64),
}

/// Errors from rational-function and congruence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    /// Every congruence holds modulo [1] = 1; callers record this as a
    /// warning instead of checking divisibility.
    #[error("modulus is trivial for n = 1")]
    TrivialModulus,
    /// The reduced denominator of a p-adic difference is divisible by p,
    /// so the claim itself is malformed (not merely false).
    #[error("denominator not invertible modulo p")]
    NonInvertibleDenominator,
    #[error("modulus must not be a unit or zero")]
    InvalidModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Errors from the statement suite.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown statement id: {0}")]
    UnknownStatement(String),
    #[error("parameter outside statement domain: {0}")]
    DomainViolation(String),
}
