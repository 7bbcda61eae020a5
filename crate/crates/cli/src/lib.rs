//! Batch CLI over the statement registry: `list`, `verify`, and `wz`.
//!
//! Exit codes: 0 when every record holds, 1 when any record fails, 2 on
//! usage errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use qcongruence::suite::{self, VerificationResult};
use qcongruence::wz::{
    sec2_boundary_vanishes, sec3_boundary_vanishes, sec3_tail_vanishes, telescoping_check,
    wz_relation_check, WZPairId,
};

#[derive(Parser)]
#[command(
    name = "qcong",
    about = "Exact batch verification of q-supercongruences and their classical counterparts",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the statement registry
    List(ListArgs),
    /// Verify statements over parameter ranges
    Verify(VerifyArgs),
    /// Check the WZ pair relation and telescoping identities
    Wz(WzArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct ListArgs {
    /// Restrict to these statement ids
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement ids to verify (repeatable)
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Verify every registered statement
    #[arg(long)]
    all: bool,
    /// Inclusive range of odd n, e.g. 3..21
    #[arg(long = "odd-range")]
    odd_range: Option<String>,
    /// Inclusive range swept for primes, e.g. 5..97
    #[arg(long)]
    primes: Option<String>,
    /// Worker pool size
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    #[arg(long)]
    out: Option<String>,
    /// Stop after the first failed record (runs sequentially)
    #[arg(long = "fail-fast")]
    fail_fast: bool,
}

#[derive(Args)]
struct WzArgs {
    /// Which pair: sec2 or sec3
    #[arg(long)]
    pair: String,
    /// Relation sweep bound on m (requires --max-k)
    #[arg(long = "max-m")]
    max_m: Option<i64>,
    /// Relation sweep bound on k (requires --max-m)
    #[arg(long = "max-k")]
    max_k: Option<i64>,
    /// Comma-separated odd n values for telescoping checks, e.g. 3,5,7
    #[arg(long = "n")]
    n_list: Option<String>,
    /// Worker pool size
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    #[arg(long)]
    out: Option<String>,
}

/// One record of a `wz` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WzRecord {
    pub pair: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    pub holds: bool,
    pub elapsed_ms: u64,
}

/// 0 iff every record holds.
pub fn exit_code_for(results: &[VerificationResult]) -> i32 {
    if results.iter().all(|r| r.holds) {
        0
    } else {
        1
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn parse_range(s: &str, what: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("{what} must look like A..B, got {s}"))?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad {what} lower bound: {s}"))?;
    let b: u64 = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad {what} upper bound: {s}"))?;
    if a > b {
        return Err(format!("{what} is empty: {s}"));
    }
    Ok((a, b))
}

fn odd_values(s: &str) -> Result<Vec<u64>, String> {
    let (a, b) = parse_range(s, "--odd-range")?;
    if a % 2 == 0 || b % 2 == 0 {
        return Err(format!("--odd-range endpoints must be odd, got {s}"));
    }
    Ok((a..=b).step_by(2).collect())
}

fn prime_values(s: &str) -> Result<Vec<u64>, String> {
    let (a, b) = parse_range(s, "--primes")?;
    Ok((a..=b)
        .filter(|&p| qcongruence::cyclotomic::is_prime(p))
        .collect())
}

fn write_out(out: &Option<String>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
        }
    }
}

/// Renders verification records in the requested format.
pub fn render_results(results: &[VerificationResult], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(results).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "n", "p", "variant", "holds", "modulus_degree", "elapsed_ms", "warnings"])
                .expect("csv header");
            for r in results {
                w.write_record([
                    r.id.clone(),
                    r.params.n.map(|v| v.to_string()).unwrap_or_default(),
                    r.params.p.map(|v| v.to_string()).unwrap_or_default(),
                    r.params
                        .variant
                        .map(|v| v.tag().to_string())
                        .unwrap_or_default(),
                    r.holds.to_string(),
                    r.modulus_degree.to_string(),
                    r.elapsed_ms.to_string(),
                    r.warnings.join(";"),
                ])
                .expect("csv record");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for r in results {
                let param = match (r.params.n, r.params.p) {
                    (Some(n), _) => format!("n={n}"),
                    (_, Some(p)) => format!("p={p}"),
                    _ => String::new(),
                };
                let variant = r
                    .params
                    .variant
                    .map(|v| format!(" variant={}", v.tag()))
                    .unwrap_or_default();
                let warnings = if r.warnings.is_empty() {
                    String::new()
                } else {
                    format!(" warnings={}", r.warnings.join(","))
                };
                writeln!(
                    s,
                    "{:<22} {param}{variant} holds={} deg={} {}ms{warnings}",
                    r.id, r.holds, r.modulus_degree, r.elapsed_ms
                )
                .expect("write to string");
            }
            s
        }
    }
}

fn cmd_list(args: ListArgs) -> i32 {
    let registry = suite::list_statements();
    let selected: Vec<&suite::Statement> = if args.ids.is_empty() {
        registry.iter().collect()
    } else {
        let mut v = Vec::new();
        for id in &args.ids {
            match registry.iter().find(|s| s.id == *id) {
                Some(s) => v.push(s),
                None => return usage_error(&format!("unknown statement id: {id}")),
            }
        }
        v
    };
    let content = match args.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                id: &'a str,
                kind: &'a str,
                modulus: &'a str,
                domain: String,
                variants: Vec<&'a str>,
                description: &'a str,
                #[serde(skip_serializing_if = "Option::is_none")]
                modulus_sample: Option<qcongruence::MPoly>,
            }
            let rows: Vec<Row> = selected
                .iter()
                .map(|s| Row {
                    id: s.id,
                    kind: s.kind.tag(),
                    modulus: s.modulus_label,
                    domain: s.domain.describe(),
                    variants: s.variants.iter().map(|v| v.tag()).collect(),
                    description: s.description,
                    modulus_sample: s.modulus_sample(),
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("serializable");
            out.push('\n');
            out
        }
        _ => {
            let mut out = String::new();
            for s in &selected {
                let variants = if s.variants.is_empty() {
                    String::new()
                } else {
                    format!(
                        " [{}]",
                        s.variants
                            .iter()
                            .map(|v| v.tag())
                            .collect::<Vec<_>>()
                            .join("|")
                    )
                };
                writeln!(
                    out,
                    "{:<22} {:<13} mod {:<32} {}{variants}",
                    s.id,
                    s.kind.tag(),
                    s.modulus_label,
                    s.domain.describe()
                )
                .expect("write to string");
            }
            out
        }
    };
    if write_out(&args.out, &content).is_err() {
        return usage_error("cannot write output file");
    }
    0
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.jobs == 0 {
        return usage_error("--jobs must be at least 1");
    }
    let ids: Vec<&str> = if args.all {
        if !args.ids.is_empty() {
            return usage_error("--all and --id are mutually exclusive");
        }
        suite::all_ids()
    } else if args.ids.is_empty() {
        return usage_error("select statements with --id or --all");
    } else {
        let mut v = Vec::new();
        for id in &args.ids {
            match suite::find_statement(id) {
                Some(s) => v.push(s.id),
                None => return usage_error(&format!("unknown statement id: {id}")),
            }
        }
        v
    };

    let odd_ns = match &args.odd_range {
        Some(s) => match odd_values(s) {
            Ok(v) => v,
            Err(e) => return usage_error(&e),
        },
        None => Vec::new(),
    };
    let primes = match &args.primes {
        Some(s) => match prime_values(s) {
            Ok(v) => v,
            Err(e) => return usage_error(&e),
        },
        None => Vec::new(),
    };

    // Explicitly-selected statements must have an applicable range.
    if !args.all {
        for id in &ids {
            let stmt = suite::find_statement(id).expect("validated");
            if stmt.domain.is_q_side() && odd_ns.is_empty() {
                return usage_error(&format!("statement {id} needs --odd-range"));
            }
            if !stmt.domain.is_q_side() && primes.is_empty() {
                return usage_error(&format!("statement {id} needs --primes"));
            }
        }
    }

    let results = if args.fail_fast {
        let mut acc = Vec::new();
        'outer: for id in &ids {
            let stmt = suite::find_statement(id).expect("validated");
            let params: &[u64] = if stmt.domain.is_q_side() { &odd_ns } else { &primes };
            for &v in params {
                if !stmt.domain.contains(v) {
                    continue;
                }
                let variants: Vec<Option<suite::Variant>> = if stmt.variants.is_empty() {
                    vec![None]
                } else {
                    stmt.variants.iter().map(|&x| Some(x)).collect()
                };
                for var in variants {
                    let r = suite::run_statement_check(stmt, v, var);
                    let failed = !r.holds;
                    acc.push(r);
                    if failed {
                        break 'outer;
                    }
                }
            }
        }
        acc
    } else {
        match suite::verify_range(&ids, &odd_ns, &primes, args.jobs) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        }
    };

    let content = render_results(&results, args.format);
    if write_out(&args.out, &content).is_err() {
        return usage_error("cannot write output file");
    }
    exit_code_for(&results)
}

fn cmd_wz(args: WzArgs) -> i32 {
    let Some(pair) = WZPairId::parse(&args.pair) else {
        return usage_error(&format!("unknown pair: {} (expected sec2 or sec3)", args.pair));
    };
    if args.jobs == 0 {
        return usage_error("--jobs must be at least 1");
    }
    match (args.max_m, args.max_k) {
        (Some(m), Some(k)) if m < 0 || k < 1 => {
            return usage_error("--max-m must be >= 0 and --max-k >= 1")
        }
        (Some(_), None) | (None, Some(_)) => {
            return usage_error("--max-m and --max-k must be given together")
        }
        _ => {}
    }
    let ns: Vec<i64> = match &args.n_list {
        Some(s) => {
            let mut v = Vec::new();
            for part in s.split(',') {
                match part.trim().parse::<i64>() {
                    Ok(n) if n >= 3 && n % 2 == 1 => v.push(n),
                    _ => return usage_error(&format!("--n values must be odd and >= 3, got {part}")),
                }
            }
            v
        }
        None => Vec::new(),
    };
    if args.max_m.is_none() && ns.is_empty() {
        return usage_error("nothing to do: give --max-m/--max-k and/or --n");
    }

    enum Task {
        Relation(i64, i64),
        Telescoping(i64),
        Boundary(i64),
        Tail(i64),
    }
    let mut tasks = Vec::new();
    if let (Some(max_m), Some(max_k)) = (args.max_m, args.max_k) {
        for m in 0..=max_m {
            for k in 1..=max_k {
                tasks.push(Task::Relation(m, k));
            }
        }
    }
    for &n in &ns {
        tasks.push(Task::Telescoping(n));
        tasks.push(Task::Boundary(n));
        if pair == WZPairId::Sec3 {
            tasks.push(Task::Tail(n));
        }
    }

    let run_task = |t: &Task| -> WzRecord {
        let start = Instant::now();
        let (check, m, k, n, holds) = match *t {
            Task::Relation(m, k) => ("relation", Some(m), Some(k), None, wz_relation_check(pair, m, k)),
            Task::Telescoping(n) => ("telescoping", None, None, Some(n), telescoping_check(pair, n)),
            Task::Boundary(n) => (
                "boundary-vanishing",
                None,
                None,
                Some(n),
                match pair {
                    WZPairId::Sec2 => sec2_boundary_vanishes(n),
                    WZPairId::Sec3 => sec3_boundary_vanishes(n),
                },
            ),
            Task::Tail(n) => ("tail-vanishing", None, None, Some(n), sec3_tail_vanishes(n)),
        };
        WzRecord {
            pair: pair.tag().to_string(),
            check: check.to_string(),
            m,
            k,
            n,
            holds,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    };

    let records: Vec<WzRecord> = if args.jobs == 1 {
        tasks.iter().map(run_task).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| tasks.par_iter().map(run_task).collect())
    };

    let content = match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&records).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["pair", "check", "m", "k", "n", "holds", "elapsed_ms"])
                .expect("csv header");
            for r in &records {
                w.write_record([
                    r.pair.clone(),
                    r.check.clone(),
                    r.m.map(|v| v.to_string()).unwrap_or_default(),
                    r.k.map(|v| v.to_string()).unwrap_or_default(),
                    r.n.map(|v| v.to_string()).unwrap_or_default(),
                    r.holds.to_string(),
                    r.elapsed_ms.to_string(),
                ])
                .expect("csv record");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &records {
                let place = match (r.m, r.k, r.n) {
                    (Some(m), Some(k), _) => format!("m={m} k={k}"),
                    (_, _, Some(n)) => format!("n={n}"),
                    _ => String::new(),
                };
                writeln!(
                    s,
                    "{} {:<18} {place} holds={} {}ms",
                    r.pair, r.check, r.holds, r.elapsed_ms
                )
                .expect("write to string");
            }
            s
        }
    };
    if write_out(&args.out, &content).is_err() {
        return usage_error("cannot write output file");
    }
    if records.iter().all(|r| r.holds) {
        0
    } else {
        1
    }
}

/// Entry point shared by the binary and the integration tests.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::List(args) => cmd_list(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Wz(args) => cmd_wz(args),
    }
}

/// Parses argv and runs; clap reports usage errors on stderr with exit 2.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    run(cli)
}

/// Test-facing variant taking explicit argv.
pub fn run_from<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(c) => run(c),
        Err(e) => {
            let _ = e.print();
            if e.exit_code() == 0 {
                0
            } else {
                2
            }
        }
    }
}
