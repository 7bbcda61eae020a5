//! The registry of verifiable statements: q-side congruences, exact
//! identities, parametric congruences with symbolic a (and b), and classical
//! p-adic claims, each with builders for both sides and its modulus. The
//! registry is data; the CLI, the docs table and the acceptance suite all
//! iterate the same list.

mod padic;
mod qside;

use std::time::Instant;

use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::congruence::Warning;
use crate::cyclotomic::is_prime;
use crate::error::SuiteError;
use crate::poly::MPoly;

pub use qside::build_rhs_common;

/// Upper-limit variant for statements stated with N = (n-1)/2 or N = n-1
/// (and their classical m = (p-1)/2 or p-1 counterparts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Half,
    Full,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::Half => "half",
            Variant::Full => "full",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatementKind {
    QCongruence,
    QIdentity,
    QParametric,
    Padic,
}

impl StatementKind {
    pub fn tag(self) -> &'static str {
        match self {
            StatementKind::QCongruence => "q-congruence",
            StatementKind::QIdentity => "q-identity",
            StatementKind::QParametric => "q-parametric",
            StatementKind::Padic => "p-adic",
        }
    }
}

/// Parameter domain of a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Odd n with n >= min.
    OddN { min: u64 },
    /// Prime p with p >= min.
    Prime { min: u64 },
}

impl Domain {
    pub fn contains(&self, param: u64) -> bool {
        match self {
            Domain::OddN { min } => param % 2 == 1 && param >= *min,
            Domain::Prime { min } => param >= *min && is_prime(param),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Domain::OddN { min } => format!("n odd, n >= {min}"),
            Domain::Prime { min } => format!("p prime, p >= {min}"),
        }
    }

    pub fn is_q_side(&self) -> bool {
        matches!(self, Domain::OddN { .. })
    }
}

/// Outcome of one statement check (before timing/reporting).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub modulus_degree: u64,
    pub warnings: Vec<Warning>,
}

impl Outcome {
    pub(crate) fn and(mut self, other: Outcome) -> Outcome {
        self.holds &= other.holds;
        for w in other.warnings {
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
        }
        // the primary modulus degree is the first one reported
        if self.modulus_degree == 0 {
            self.modulus_degree = other.modulus_degree;
        }
        self
    }
}

type CheckFn = fn(u64, Option<Variant>) -> Outcome;

/// A registered statement.
pub struct Statement {
    pub id: &'static str,
    pub kind: StatementKind,
    pub description: &'static str,
    pub modulus_label: &'static str,
    pub domain: Domain,
    pub variants: &'static [Variant],
    check: CheckFn,
}

impl Statement {
    /// The modulus polynomial at the smallest in-domain parameter, as a
    /// concrete sample for listings (q-side statements only).
    pub fn modulus_sample(&self) -> Option<MPoly> {
        if !self.domain.is_q_side() {
            return None;
        }
        let n = match self.domain {
            Domain::OddN { min } => min.max(3) as u32,
            Domain::Prime { .. } => unreachable!(),
        };
        qside::modulus_sample(self.id, n)
    }
}

const BOTH: &[Variant] = &[Variant::Half, Variant::Full];
const NONE: &[Variant] = &[];

/// Parameters of one verification record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<Variant>,
}

impl Params {
    pub fn for_n(n: u64, variant: Option<Variant>) -> Self {
        Params {
            n: Some(n),
            p: None,
            variant,
        }
    }

    pub fn for_p(p: u64, variant: Option<Variant>) -> Self {
        Params {
            n: None,
            p: Some(p),
            variant,
        }
    }

    pub fn value(&self) -> u64 {
        self.n.or(self.p).expect("params carry n or p")
    }
}

/// Outcome record of one verified (statement, parameters) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub id: String,
    pub params: Params,
    pub holds: bool,
    pub modulus_degree: u64,
    pub elapsed_ms: u64,
    pub warnings: Vec<String>,
}

static REGISTRY: Lazy<Vec<Statement>> = Lazy::new(build_registry);

fn build_registry() -> Vec<Statement> {
    let mut reg = qside::statements();
    reg.extend(padic::statements());
    let mut seen = std::collections::HashSet::new();
    for s in &reg {
        assert!(seen.insert(s.id), "duplicate statement id {}", s.id);
    }
    reg
}

/// The full registry in stable order.
pub fn list_statements() -> &'static [Statement] {
    &REGISTRY
}

pub fn find_statement(id: &str) -> Option<&'static Statement> {
    REGISTRY.iter().find(|s| s.id == id)
}

/// Verifies a single statement at the given parameters, building both sides
/// exactly; never approximates.
pub fn verify_statement(id: &str, params: Params) -> Result<VerificationResult, SuiteError> {
    let stmt = find_statement(id).ok_or_else(|| SuiteError::UnknownStatement(id.to_string()))?;
    let value = match (stmt.domain, params.n, params.p) {
        (Domain::OddN { .. }, Some(n), _) => n,
        (Domain::Prime { .. }, _, Some(p)) => p,
        _ => {
            return Err(SuiteError::DomainViolation(format!(
                "statement {id} expects parameter {}",
                if stmt.domain.is_q_side() { "n" } else { "p" }
            )))
        }
    };
    if !stmt.domain.contains(value) {
        return Err(SuiteError::DomainViolation(format!(
            "{value} outside domain of {id} ({})",
            stmt.domain.describe()
        )));
    }
    match (stmt.variants.is_empty(), params.variant) {
        (true, Some(_)) => {
            return Err(SuiteError::DomainViolation(format!(
                "statement {id} has no variants"
            )))
        }
        (false, None) => {
            return Err(SuiteError::DomainViolation(format!(
                "statement {id} requires a variant (half or full)"
            )))
        }
        _ => {}
    }
    Ok(run_check(stmt, value, params.variant))
}

fn run_check(stmt: &Statement, value: u64, variant: Option<Variant>) -> VerificationResult {
    let start = Instant::now();
    let outcome = (stmt.check)(value, variant);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let params = if stmt.domain.is_q_side() {
        Params::for_n(value, variant)
    } else {
        Params::for_p(value, variant)
    };
    VerificationResult {
        id: stmt.id.to_string(),
        params,
        holds: outcome.holds,
        modulus_degree: outcome.modulus_degree,
        elapsed_ms,
        warnings: outcome.warnings.iter().map(|w| w.to_string()).collect(),
    }
}

/// Cross product of the statements with their applicable parameters,
/// evaluated with at most `parallelism` concurrent tasks. Results come back
/// in deterministic order regardless of the schedule.
pub fn verify_range(
    ids: &[&str],
    odd_ns: &[u64],
    primes: &[u64],
    parallelism: usize,
) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut tasks: Vec<(&'static Statement, u64, Option<Variant>)> = Vec::new();
    for id in ids {
        let stmt =
            find_statement(id).ok_or_else(|| SuiteError::UnknownStatement(id.to_string()))?;
        let params: &[u64] = if stmt.domain.is_q_side() { odd_ns } else { primes };
        for &v in params {
            if !stmt.domain.contains(v) {
                continue;
            }
            if stmt.variants.is_empty() {
                tasks.push((stmt, v, None));
            } else {
                for &var in stmt.variants {
                    tasks.push((stmt, v, Some(var)));
                }
            }
        }
    }
    let parallelism = parallelism.max(1);
    if parallelism == 1 {
        return Ok(tasks
            .iter()
            .map(|(s, v, var)| run_check(s, *v, *var))
            .collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("worker pool");
    Ok(pool.install(|| {
        tasks
            .par_iter()
            .map(|(s, v, var)| run_check(s, *v, *var))
            .collect()
    }))
}

/// All registry ids in registry order.
pub fn all_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|s| s.id).collect()
}

/// A registry extended with a deliberately wrong statement ("fixture-wrong",
/// its right side off by one) so report plumbing and exit codes can be tested
/// against a false record. Never part of the standard registry.
pub fn wrong_fixture_statement() -> Statement {
    Statement {
        id: "fixture-wrong",
        kind: StatementKind::QCongruence,
        description: "deliberately false fixture: lemma right side shifted by one",
        modulus_label: "Φ_n(q)",
        domain: Domain::OddN { min: 3 },
        variants: NONE,
        check: qside::check_fixture_wrong,
    }
}

/// Runs a check for a statement that may not be in the standard registry
/// (used by CLI tests with the wrong fixture).
pub fn run_statement_check(stmt: &Statement, value: u64, variant: Option<Variant>) -> VerificationResult {
    run_check(stmt, value, variant)
}
