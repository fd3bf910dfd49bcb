//! Argument handling and dispatch for the `factor` binary.

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclofactor::factorizer::{self, verify_with, CheckOutcome, CheckResult, FactorError};
use cyclofactor::oracle::OracleConfig;
use cyclofactor::report::{self, FactorizationRecord};
use cyclofactor::sweep::{run_sweep, SweepConfig};
use cyclofactor::{Factorization, FieldCtx, FieldElem, Poly};
use serde::Serialize;

pub const SEED_ENV: &str = "CYCLOFACTOR_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "factor",
    version,
    about = "Factor binomials, X^n - 1, cyclotomic polynomials and f(X^n) over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    /// Print the formula parameters along with the factors.
    #[arg(long, global = true)]
    pub show_plan: bool,
    /// Seed for the oracle and the sweep; overridden by CYCLOFACTOR_SEED.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(flatten)]
    Factor(Target),
    /// Factor, then check the result against the brute-force oracle.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Factor and verify X^n - a over a grid of fields, n and a.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Subcommand)]
pub enum Target {
    /// Factor X^n - a.
    Binomial(BinomialArgs),
    /// Factor X^n - 1.
    Unity(FieldN),
    /// Factor the n-th cyclotomic polynomial.
    Cyclotomic(FieldN),
    /// Factor f(X^n) for an irreducible f.
    Compose(ComposeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FieldN {
    /// Field as `q`, `p^m` or `p^m/c_m,...,c_0`.
    #[arg(long)]
    pub field: String,
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BinomialArgs {
    #[command(flatten)]
    pub base: FieldN,
    /// Decimal in prime fields, `[c_(m-1),...,c_0]` otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Debug, Clone, Args)]
pub struct ComposeArgs {
    #[command(flatten)]
    pub base: FieldN,
    /// Polynomial such as `x^2 + 1`.
    #[arg(long)]
    pub f: String,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated field sizes.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 5, 7, 8, 9, 11, 13])]
    pub fields: Vec<u64>,
    #[arg(long, default_value_t = 60)]
    pub max_n: u64,
    /// Fields up to this size use every nonzero a.
    #[arg(long, default_value_t = 9)]
    pub exhaustive_up_to: u64,
    #[arg(long, default_value_t = 10)]
    pub random_elements: usize,
    #[arg(long, default_value_t = 200)]
    pub oracle_max_degree: usize,
}

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const MATH: i32 = 3;
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Math(FactorError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Math(_) => exit::MATH,
        }
    }
}

impl From<FactorError> for CliError {
    fn from(e: FactorError) -> Self {
        CliError::Math(e)
    }
}

/// What the binary prints and returns.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn parse_field(spec: &str) -> Result<FieldCtx, CliError> {
    FieldCtx::parse_spec(spec).map_err(|e| CliError::Parse(format!("field '{spec}': {e}")))
}

fn parse_elem(ctx: &FieldCtx, s: &str) -> Result<FieldElem, CliError> {
    FieldElem::parse(ctx, s).map_err(|e| CliError::Parse(format!("element '{s}': {e}")))
}

fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<Poly, CliError> {
    Poly::parse(ctx, s).map_err(|e| CliError::Parse(format!("polynomial '{s}': {e}")))
}

fn factor_target(target: &Target) -> Result<Factorization, CliError> {
    Ok(match target {
        Target::Binomial(args) => {
            let ctx = parse_field(&args.base.field)?;
            factorizer::factor_binomial(&parse_elem(&ctx, &args.a)?, args.base.n)?
        }
        Target::Unity(args) => factorizer::factor_unity(&parse_field(&args.field)?, args.n)?,
        Target::Cyclotomic(args) => {
            factorizer::factor_cyclotomic(&parse_field(&args.field)?, args.n)?
        }
        Target::Compose(args) => {
            let ctx = parse_field(&args.base.field)?;
            factorizer::factor_composition(&parse_poly(&ctx, &args.f)?, args.base.n)?
        }
    })
}

fn render(fz: &Factorization, cli: &Cli) -> String {
    match cli.output {
        Output::Text => report::to_text(fz, cli.show_plan),
        Output::Json => report::to_json(fz, cli.show_plan) + "\n",
    }
}

/// The seed in effect: the environment variable wins over the flag.
pub fn effective_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{SEED_ENV}='{v}' is not an integer"))),
        Err(_) => Ok(flag),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let seed = effective_seed(cli.seed)?;
    match &cli.command {
        Command::Factor(target) => {
            let fz = factor_target(target)?;
            Ok(Outcome {
                code: exit::OK,
                stdout: render(&fz, cli),
            })
        }
        Command::Verify { target } => verify(target, cli, seed),
        Command::Sweep(args) => sweep(args, cli, seed),
    }
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    factorization: FactorizationRecord,
    checks: &'a [CheckResult],
    passed: bool,
}

fn verify(target: &Target, cli: &Cli, seed: u64) -> Result<Outcome, CliError> {
    let fz = factor_target(target)?;
    let cfg = OracleConfig {
        rng_seed: seed,
        ..OracleConfig::default()
    };
    let report = verify_with(&fz, &cfg);
    let code = if report.passed() {
        exit::OK
    } else {
        exit::VERIFICATION
    };
    let stdout = match cli.output {
        Output::Json => {
            let record = VerifyRecord {
                factorization: FactorizationRecord::new(&fz, cli.show_plan),
                checks: &report.checks,
                passed: report.passed(),
            };
            serde_json::to_string_pretty(&record).expect("serializable") + "\n"
        }
        Output::Text => {
            let mut out = report::to_text(&fz, cli.show_plan);
            for c in &report.checks {
                let status = match c.outcome {
                    CheckOutcome::Pass => "pass",
                    CheckOutcome::Fail => "FAIL",
                    CheckOutcome::Skipped => "skipped",
                };
                if c.detail.is_empty() {
                    out += &format!("{}: {status}\n", c.name);
                } else {
                    out += &format!("{}: {status} ({})\n", c.name, c.detail);
                }
            }
            out += if report.passed() {
                "verification passed\n"
            } else {
                "verification FAILED\n"
            };
            out
        }
    };
    Ok(Outcome { code, stdout })
}

fn sweep(args: &SweepArgs, cli: &Cli, seed: u64) -> Result<Outcome, CliError> {
    for &q in &args.fields {
        parse_field(&q.to_string())?;
    }
    let cfg = SweepConfig {
        fields: args.fields.clone(),
        max_n: args.max_n,
        exhaustive_up_to: args.exhaustive_up_to,
        random_elements: args.random_elements,
        seed,
        oracle_max_degree: args.oracle_max_degree,
    };
    let report = run_sweep(&cfg);
    let code = if report.failed == 0 {
        exit::OK
    } else {
        exit::VERIFICATION
    };
    let stdout = match cli.output {
        Output::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Output::Text => {
            let mut out = String::new();
            for inst in report.instances.iter().filter(|i| !i.passed()) {
                let why = inst.error.clone().unwrap_or_else(|| {
                    let failed: Vec<&str> = inst
                        .checks
                        .iter()
                        .filter(|(_, o)| *o == CheckOutcome::Fail)
                        .map(|(n, _)| n.as_str())
                        .collect();
                    format!("failed {}", failed.join(", "))
                });
                out += &format!("FAIL {} n={} a={}: {why}\n", inst.field, inst.n, inst.a);
            }
            out += &format!(
                "sweep: {} instances, {} passed, {} failed\n",
                report.total, report.passed, report.failed
            );
            out
        }
    };
    Ok(Outcome { code, stdout })
}
