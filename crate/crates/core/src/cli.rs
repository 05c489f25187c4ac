//! Command-line front end: `validate`, `omega`, `oracle` and `compare`.
//!
//! Exit codes: `compare` returns 0 for equal ideals, 1 for proper
//! containment and 2 for a contradiction or unknown containment. Usage
//! errors exit with 64, malformed input with 65 and unreadable files with 66.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::chains::{prolong, DiffChain};
use crate::compare::compare_ideals_with;
use crate::dimension::{omega_with, OmegaOptions, OmegaResult, DEFAULT_SUBSET_LIMIT};
use crate::error::Error;
use crate::numpoly::binomial;
use crate::system::{parse_system, SystemFile};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

/// Environment variable overriding the inclusion–exclusion generator limit.
pub const SUBSET_LIMIT_ENV: &str = "DIFFDIM_SUBSET_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "diffdim", version, about = "Differential dimension polynomials of characterizable ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a chain is triangular and coherent.
    Validate {
        file: PathBuf,
        #[arg(long)]
        chain: String,
        /// Include the reduction of every Δ-polynomial.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute the differential dimension polynomial of a chain.
    Omega {
        file: PathBuf,
        #[arg(long)]
        chain: String,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate Krull dimensions of truncations against the polynomial.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        chain: String,
        #[arg(long = "max-order")]
        max_order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare I(smaller) ⊆ I(larger).
    Compare {
        file: PathBuf,
        #[arg(long)]
        smaller: String,
        #[arg(long)]
        larger: String,
        #[arg(long)]
        assert_containment: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and the subset limit
/// taken from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let limit = match std::env::var(SUBSET_LIMIT_ENV) {
        Ok(s) => match s.parse::<usize>() {
            Ok(v) => v,
            Err(_) => {
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("{SUBSET_LIMIT_ENV} must be a nonnegative integer, got `{s}`\n"),
                )
            }
        },
        Err(_) => DEFAULT_SUBSET_LIMIT,
    };
    run_with(args, OmegaOptions { subset_limit: limit })
}

pub fn run_with<I, T>(args: I, options: OmegaOptions) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(0, text)
            };
        }
    };
    match dispatch(cli.command, options) {
        Ok(outcome) => outcome,
        Err(failure) => failure,
    }
}

fn load(path: &PathBuf) -> Result<SystemFile, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Outcome::fail(EXIT_NO_INPUT, format!("cannot read {}: {e}\n", path.display()))
    })?;
    parse_system(&text).map_err(|e| Outcome::fail(EXIT_DATA, format!("{}:{e}\n", path.display())))
}

fn chain<'a>(sys: &'a SystemFile, name: &str) -> Result<&'a DiffChain, Outcome> {
    sys.chain(name).ok_or_else(|| {
        let known: Vec<&str> = sys.chain_names().collect();
        Outcome::fail(
            EXIT_USAGE,
            format!(
                "unknown chain `{name}` (file defines: {})\n\n{}\n",
                known.join(", "),
                usage()
            ),
        )
    })
}

fn usage() -> String {
    use clap::CommandFactory;
    Cli::command().render_usage().to_string()
}

fn data_error(e: Error) -> Outcome {
    Outcome::fail(EXIT_DATA, format!("error: {e}\n"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(command: Command, options: OmegaOptions) -> Result<Outcome, Outcome> {
    match command {
        Command::Validate {
            file,
            chain: name,
            explain,
            json,
        } => {
            let sys = load(&file)?;
            let s = chain(&sys, &name)?;
            let report = s.validate().map_err(data_error)?;
            let code = if report.is_accepted() { 0 } else { 1 };
            let out = if json {
                let mut value = serde_json::to_value(&report).expect("serializable");
                if explain {
                    value["delta_checks"] =
                        serde_json::to_value(&report.delta_checks).expect("serializable");
                }
                to_json(&value)
            } else {
                let mut out = String::new();
                let yes_no = |b: bool| if b { "yes" } else { "no" };
                writeln!(out, "chain {name}").unwrap();
                writeln!(out, "triangular: {}", yes_no(report.triangular)).unwrap();
                writeln!(out, "coherent: {}", yes_no(report.coherent)).unwrap();
                writeln!(out, "regularity of initials and separants: unverified-assumed").unwrap();
                for m in &report.messages {
                    writeln!(out, "note: {m}").unwrap();
                }
                if explain {
                    out.push_str(&to_json(&report.delta_checks));
                }
                out
            };
            Ok(Outcome::ok(code, out))
        }
        Command::Omega {
            file,
            chain: name,
            json,
        } => {
            let sys = load(&file)?;
            let s = chain(&sys, &name)?;
            let result = omega_with(s, options).map_err(data_error)?;
            let out = if json {
                to_json(&result)
            } else {
                omega_text(&result, &sys)
            };
            Ok(Outcome::ok(0, out))
        }
        Command::Oracle {
            file,
            chain: name,
            max_order,
            json,
        } => {
            let sys = load(&file)?;
            let s = chain(&sys, &name)?;
            let result = omega_with(s, options).map_err(data_error)?;
            let table = oracle_table(s, &result, max_order).map_err(data_error)?;
            let all_match = table
                .rows
                .iter()
                .filter(|r| r.order >= table.stabilization_bound)
                .all(|r| r.matches);
            let out = if json {
                to_json(&table)
            } else {
                let mut out = String::new();
                writeln!(out, "ω(ℓ) = {} (stabilizes at ℓ ≥ {})", result.omega, result.stabilization_bound)
                    .unwrap();
                writeln!(out, "{:>4}  {:>8}  {:>8}  match", "ℓ", "Ω(ℓ)", "ω(ℓ)").unwrap();
                for r in &table.rows {
                    writeln!(
                        out,
                        "{:>4}  {:>8}  {:>8}  {}",
                        r.order,
                        r.krull,
                        r.omega,
                        if r.matches { "yes" } else { "no" }
                    )
                    .unwrap();
                }
                out
            };
            Ok(Outcome::ok(if all_match { 0 } else { 1 }, out))
        }
        Command::Compare {
            file,
            smaller,
            larger,
            assert_containment,
            json,
        } => {
            let sys = load(&file)?;
            let s = chain(&sys, &smaller)?;
            let t = chain(&sys, &larger)?;
            let verdict =
                compare_ideals_with(s, t, assert_containment, options).map_err(data_error)?;
            let out = if json {
                to_json(&verdict)
            } else {
                let mut out = String::new();
                writeln!(out, "relation: {}", verdict.relation).unwrap();
                if let Some(assumed) = verdict.assumed_relation {
                    writeln!(out, "relation if I ⊆ J is assumed: {assumed}").unwrap();
                }
                writeln!(out, "containment: {}", to_json(&verdict.containment).trim().trim_matches('"'))
                    .unwrap();
                writeln!(out, "ω_I(ℓ) = {}  ({smaller})", verdict.omega_smaller).unwrap();
                writeln!(out, "ω_J(ℓ) = {}  ({larger})", verdict.omega_larger).unwrap();
                for l in &verdict.leader_report {
                    let show = |d: Option<u32>| d.map_or("-".to_string(), |d| d.to_string());
                    writeln!(
                        out,
                        "leader {}: degree {} in {smaller}, {} in {larger}",
                        l.leader,
                        show(l.smaller),
                        show(l.larger)
                    )
                    .unwrap();
                }
                writeln!(
                    out,
                    "degree products: {} vs {}",
                    verdict.degree_products.0, verdict.degree_products.1
                )
                .unwrap();
                for m in &verdict.messages {
                    writeln!(out, "note: {m}").unwrap();
                }
                out
            };
            Ok(Outcome::ok(verdict.exit_code(), out))
        }
    }
}

fn omega_text(result: &OmegaResult, sys: &SystemFile) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "ω(ℓ) = {} = {} (stabilizes at ℓ ≥ {})",
        result.omega,
        result.omega.binomial_form(),
        result.stabilization_bound
    )
    .unwrap();
    writeln!(out, "degree: {}", result.degree()).unwrap();
    writeln!(out, "differential dimension: {}", result.differential_dimension()).unwrap();
    for cone in &result.janet_cones {
        let name = &sys.ring.indeterminate_names()[cone.indeterminate];
        let mult: Vec<&str> = cone
            .multiplicative
            .iter()
            .map(|&i| sys.ring.derivation_names()[i].as_str())
            .collect();
        writeln!(out, "janet cone: {name}{} multiplicative {{{}}}", cone.generator, mult.join(","))
            .unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub order: u32,
    /// `Ω(ℓ) = m·C(ℓ+n,n) − |S_{≤ℓ}|`.
    pub krull: i128,
    pub omega: i128,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleTable {
    pub stabilization_bound: u32,
    pub rows: Vec<OracleRow>,
}

/// Compares `ω(ℓ)` with the dimension count read off the prolonged chain
/// `S_{≤ℓ}` for `ℓ = 0..=max_order`.
pub fn oracle_table(
    chain: &DiffChain,
    result: &OmegaResult,
    max_order: u32,
) -> crate::Result<OracleTable> {
    let (n, m) = (chain.ring().n(), chain.ring().m());
    let prolonged = prolong(chain, max_order)?;
    let rows = (0..=max_order)
        .map(|l| {
            let size = prolonged.iter().filter(|p| p.leader.order() <= l).count() as i128;
            let krull = m as i128 * binomial(l as i128 + n as i128, n) - size;
            let omega = result.omega.eval(l.into());
            OracleRow {
                order: l,
                krull,
                omega,
                matches: krull == omega,
            }
        })
        .collect();
    Ok(OracleTable {
        stabilization_bound: result.stabilization_bound,
        rows,
    })
}
