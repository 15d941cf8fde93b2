//! Command-line surface.
//!
//! Exit codes are a stable contract: 0 success, 2 usage, 3 mathematical
//! refusal, 4 scan budget exhausted, 5 identity failure. Rationals are
//! printed as `p/q` in tables and `{"num": p, "den": q}` in JSON; JSON
//! output is one compact object per line.

mod render;
pub mod report;
pub mod scan;

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{self, Rational};
use crate::brieskorn::{self, OracleConfig, DEFAULT_ORACLE_CAP};
use crate::engine::{self, MecInput};
use crate::error::Error;
use crate::identities;
use crate::orbit;

pub use report::{build_report, Method, Report, ReportOptions, RouteValue};
pub use scan::{run_scan, ScanOutcome, ScanRequest, ScanSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_IDENTITY: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Exact contact invariants of Brieskorn manifolds"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "BRIESKORN_FORMAT",
        default_value = "table"
    )]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest principal period the brute-force oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,

    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean Euler characteristic by one or all routes.
    Mec {
        /// Comma-separated exponents, e.g. 2,3,5,7
        exponents: String,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Displaceability verdict with its reason chain.
    Classify { exponents: String },
    /// Orbit-space strata of the Reeb flow.
    Orbits { exponents: String },
    /// Multiplicity of a stratum, by the counting definition or the product formula.
    Phi {
        /// Period of the stratum (counting definition).
        #[arg(long, requires = "principal")]
        period: Option<u64>,
        /// Principal period.
        #[arg(long)]
        principal: Option<u64>,
        /// Comma-separated larger periods.
        #[arg(long, default_value = "")]
        larger: String,
        /// Exponents (product formula).
        #[arg(long, requires = "support", conflicts_with = "period")]
        exponents: Option<String>,
        /// Comma-separated zero-based coordinate indices.
        #[arg(long)]
        support: Option<String>,
    },
    /// Principal Maslov index, index sign and stratum mean indices.
    Maslov { exponents: String },
    /// Sweeps of the combinatorial identities.
    Identities {
        #[arg(long, default_value_t = 200)]
        f_max: u64,
        #[arg(long, default_value_t = 20)]
        tuple_max: u64,
        /// Tuple length minus one for the tuple sweeps.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Reports over every nondecreasing pairwise coprime tuple in a box.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        min: u64,
        /// Emit every ordering of each tuple.
        #[arg(long)]
        all_orderings: bool,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Maximum number of reports.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Include per-tuple timings (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Orbibundle formula on user-supplied strata (plain text or JSON; `-` for stdin).
    Orbibundle { input: String },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let line = serde_json::to_string(value).map_err(io::Error::other)?;
        writeln!(self.out, "{line}")
    }

    fn usage(&mut self, e: &Error) -> io::Result<i32> {
        writeln!(self.err, "usage error: {e}")?;
        Ok(EXIT_USAGE)
    }

    fn refusal(&mut self, input: &[u64], message: &str) -> io::Result<i32> {
        match self.format {
            Format::Json => self.json(&serde_json::json!({
                "error": {"kind": "refusal", "message": message},
                "input": input,
            }))?,
            _ => writeln!(self.err, "refused: {message}")?,
        }
        Ok(EXIT_REFUSAL)
    }

    fn error(&mut self, e: &Error, input: &[u64]) -> io::Result<i32> {
        if e.is_refusal() {
            self.refusal(input, &e.to_string())
        } else {
            self.usage(e)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run_with<'a, I, T>(args: I, out: &'a mut dyn Write, err: &'a mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(if e.use_stderr() { err } else { out }, "{}", e.render());
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        format: cli.format,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "io error: {e}");
            1
        }
    }
}

pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn oracle_config(args: &OracleArgs) -> OracleConfig {
    OracleConfig {
        cap: args.oracle_cap,
        jobs: args.jobs,
    }
}

fn dispatch(command: Command, io: &mut Io) -> io::Result<i32> {
    match command {
        Command::Mec {
            exponents,
            method,
            oracle,
        } => {
            let exps = match arith::parse_exponents(&exponents) {
                Ok(e) => e,
                Err(e) => return io.usage(&e),
            };
            let opts = ReportOptions {
                method,
                oracle: oracle_config(&oracle),
                verdict: false,
                timing: true,
            };
            let report = build_report(&exps, &opts);
            if let Some(msg) = report.refusal() {
                let msg = msg.to_string();
                return io.refusal(&exps, &msg);
            }
            render::report(io, &report)?;
            Ok(EXIT_OK)
        }
        Command::Classify { exponents } => {
            let exps = match arith::parse_exponents(&exponents) {
                Ok(e) => e,
                Err(e) => return io.usage(&e),
            };
            let opts = ReportOptions {
                method: Method::Closed,
                verdict: true,
                timing: true,
                ..ReportOptions::default()
            };
            render::report(io, &build_report(&exps, &opts))?;
            Ok(EXIT_OK)
        }
        Command::Orbits { exponents } => {
            let exps = match arith::parse_exponents(&exponents) {
                Ok(e) => e,
                Err(e) => return io.usage(&e),
            };
            match orbit::enumerate_orbit_spaces(&exps) {
                Ok(strata) => {
                    render::orbits(io, &strata)?;
                    Ok(EXIT_OK)
                }
                Err(e) => io.error(&e, &exps),
            }
        }
        Command::Phi {
            period,
            principal,
            larger,
            exponents,
            support,
        } => cmd_phi(io, period, principal, &larger, exponents, support),
        Command::Maslov { exponents } => {
            let exps = match arith::parse_exponents(&exponents) {
                Ok(e) => e,
                Err(e) => return io.usage(&e),
            };
            match maslov_summary(&exps) {
                Ok(summary) => {
                    render::maslov(io, &summary)?;
                    Ok(EXIT_OK)
                }
                Err(e) => io.error(&e, &exps),
            }
        }
        Command::Identities {
            f_max,
            tuple_max,
            n,
        } => {
            if f_max < 1 || tuple_max < 1 || n < 2 {
                return io.usage(&Error::domain("bounds must be at least 1 and n at least 2"));
            }
            let reports = vec![
                identities::sweep_f_identity(f_max),
                identities::sweep_reduction(n, tuple_max),
                identities::sweep_unit_fractions(n, tuple_max),
            ];
            render::identities(io, &reports)?;
            if reports.iter().all(|r| r.passed) {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_IDENTITY)
            }
        }
        Command::Scan {
            n,
            max,
            min,
            all_orderings,
            method,
            budget,
            timing,
            oracle,
        } => {
            if n < 2 || max < 2 || min < 1 {
                return io.usage(&Error::domain("scan needs n >= 2, max >= 2, min >= 1"));
            }
            let req = ScanRequest {
                n,
                min,
                max,
                all_orderings,
                budget,
                jobs: oracle.jobs,
                report: ReportOptions {
                    method,
                    oracle: OracleConfig {
                        cap: oracle.oracle_cap,
                        jobs: 1,
                    },
                    verdict: true,
                    timing,
                },
            };
            let outcome = run_scan(&req);
            render::scan(io, &outcome)?;
            if outcome.summary.truncated {
                writeln!(
                    io.err,
                    "warning: budget of {budget} reports exhausted; output is partial"
                )?;
                return Ok(EXIT_BUDGET);
            }
            Ok(EXIT_OK)
        }
        Command::Orbibundle { input } => {
            let text = if input == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                match std::fs::read_to_string(&input) {
                    Ok(s) => s,
                    Err(e) => return io.usage(&Error::Parse(format!("{input}: {e}"))),
                }
            };
            cmd_orbibundle(io, &text)
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {p:?}")))
        })
        .collect()
}

fn cmd_phi(
    io: &mut Io,
    period: Option<u64>,
    principal: Option<u64>,
    larger: &str,
    exponents: Option<String>,
    support: Option<String>,
) -> io::Result<i32> {
    let result = match (period, principal, exponents, support) {
        (Some(t_i), Some(t_k), None, _) => parse_list(larger)
            .and_then(|larger| orbit::phi_count(t_i, &larger, t_k))
            .map(|v| ("definition", v.into())),
        (None, _, Some(exps), Some(support)) => arith::parse_exponents(&exps)
            .and_then(|e| Ok((e, parse_list(&support)?)))
            .and_then(|(e, s)| {
                let s: Vec<usize> = s.iter().map(|&j| j as usize).collect();
                orbit::phi_product_formula(&e, &s)
            })
            .map(|v| ("product", v)),
        _ => Err(Error::Parse(
            "give --period and --principal, or --exponents and --support".into(),
        )),
    };
    match result {
        Ok((rule, value)) => {
            render::phi(io, rule, &value)?;
            Ok(EXIT_OK)
        }
        Err(e) => io.error(&e, &[]),
    }
}

fn cmd_orbibundle(io: &mut Io, text: &str) -> io::Result<i32> {
    let parsed = if text.trim_start().starts_with('{') {
        MecInput::from_json(text)
    } else {
        text.parse::<MecInput>()
    };
    let input = match parsed {
        Ok(i) => i,
        Err(e) => return io.error(&e, &[]),
    };
    match engine::mec_orbibundle(&input) {
        Ok(mec) => {
            render::orbibundle(io, &input, &mec)?;
            Ok(EXIT_OK)
        }
        Err(e) => io.error(&e, &[]),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MaslovSummary {
    pub input: Vec<u64>,
    pub mu_p: brieskorn::PrincipalMaslov,
    #[serde(with = "crate::arith::json::rational")]
    pub unit_fraction_sum: Rational,
    pub index_sign: Option<brieskorn::IndexSign>,
    /// `(period, mean index)` per distinct stratum period.
    pub mean_indices: Vec<StratumMeanIndex>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumMeanIndex {
    pub period: u64,
    #[serde(with = "crate::arith::json::rational")]
    pub mean_index: Rational,
}

pub fn maslov_summary(exps: &[u64]) -> Result<MaslovSummary, Error> {
    let mu_p = brieskorn::principal_maslov_forms(exps)?;
    let principal = Rational::from_integer(arith::lcm_all(exps)?);
    let mean_indices = if exps.len() <= 16 {
        orbit::lattice_periods(exps)
            .unwrap_or_default()
            .into_iter()
            .map(|t| StratumMeanIndex {
                period: t,
                mean_index: &mu_p.lcm_form * Rational::from_integer(t.into()) / &principal,
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(MaslovSummary {
        input: exps.to_vec(),
        unit_fraction_sum: arith::unit_fraction_sum(exps)?,
        index_sign: brieskorn::index_sign(exps).ok(),
        mu_p,
        mean_indices,
    })
}
