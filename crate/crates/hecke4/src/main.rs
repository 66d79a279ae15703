//! `hecke4`: the genus-4 spinor Hecke series as an exact rational function
//!
//! ```text
//! Omega(D_p(X)) = P_4(X) / Q_4(X)
//! ```
//!
//! over the Satake coordinates `x0, x1, ..., x4`. The tool emits the
//! presentation (JSON, LaTeX, or text), verifies it against brute-force coset
//! enumeration at concrete primes, and reconstructs numerators from counts
//! alone. Every run prints one JSON report to stdout; the exit code is 0 when
//! the requested check passes, 1 when it ran and failed, and 2 when the
//! request itself could not be carried out (bad arguments, unsupported genus,
//! or an enumeration refused by the coset budget).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_oracle::{EnumConfig, NormalizationOrder};
use serde_json::Value;
use sym_table::SymConvention;

use commands::ReconstructArgs;

#[derive(Parser)]
#[command(
    name = "hecke4",
    version,
    about = "Exact genus-4 Hecke series: emit the rational presentation, \
             verify it against coset enumeration, reconstruct numerators from counts"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Refuse any enumeration whose estimated coset count exceeds this cap.
    /// Accepts plain integers, underscores, and e-notation like 1e9; the
    /// HECKE4_BUDGET environment variable supplies a default.
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<u128>,

    /// Worker threads for the enumeration; 0 means one per core.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Symmetrization convention behind the coefficient table.
    #[arg(long, global = true, value_parser = parse_convention, default_value = "orbit-sum")]
    sym_convention: SymConvention,

    /// Diagonal weighting inside the spherical map.
    #[arg(long, global = true, value_parser = parse_order, default_value = "descending")]
    normalization: NormalizationOrder,

    /// Directory for any emitted files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the exact presentation to --out as JSON, LaTeX, or text.
    Emit {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the presentation and print a JSON report; exits 1 on failure.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Rebuild numerator data from coset enumeration and compare it with the
    /// closed form.
    Reconstruct {
        #[arg(long)]
        genus: usize,
        /// Prime for a single-prime run (genus 1 defaults to 2, 3, 5).
        #[arg(long)]
        p: Option<i64>,
        /// Genus 2 only: interpolate the numerator symbolically in p across
        /// nine primes.
        #[arg(long)]
        symbolic: bool,
        /// Enumerate the series for delta = 0..=max-delta.
        #[arg(long)]
        max_delta: Option<u32>,
        /// Highest X-power solved for; defaults to the closed-form degree.
        #[arg(long)]
        degree_bound: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Coefficient pairing across the numerator table plus its boundary values.
    Funceq,
    /// Inversion symmetries of the whole numerator at one genus.
    Remark {
        #[arg(long, default_value_t = 4)]
        genus: usize,
    },
    /// Series coefficients of the closed form against enumerated images.
    Oracle {
        #[arg(long, default_value_t = 4)]
        genus: usize,
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 2)]
        max_delta: u32,
    },
    /// Genus-3 specialization x4 = 0 of the genus-4 presentation.
    Siegel {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 3)]
        max_delta: u32,
    },
    /// Coset totals against the closed-form prediction.
    Counts {
        #[arg(long, default_value_t = 4)]
        genus: usize,
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 1)]
        delta: u32,
        /// Also split counts by elementary-divisor class, one stderr line per
        /// class.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Latex => "latex",
            Format::Text => "text",
        }
    }
}

/// Resolved execution context shared by every subcommand.
pub struct Ctx {
    pub config: EnumConfig,
    pub convention: SymConvention,
    pub order: NormalizationOrder,
    pub out: Option<PathBuf>,
}

fn parse_convention(s: &str) -> Result<SymConvention, String> {
    SymConvention::from_name(s)
        .ok_or_else(|| format!("unknown convention {s:?} (expected orbit-sum or full-group)"))
}

fn parse_order(s: &str) -> Result<NormalizationOrder, String> {
    NormalizationOrder::from_name(s)
        .ok_or_else(|| format!("unknown normalization {s:?} (expected descending or ascending)"))
}

fn parse_budget(s: &str) -> Result<u128, String> {
    let cleaned = s.replace('_', "");
    let (mantissa, exponent) = match cleaned.split_once(['e', 'E']) {
        Some((m, e)) => (
            m,
            e.parse::<u32>()
                .map_err(|_| format!("bad exponent in budget {s:?}"))?,
        ),
        None => (cleaned.as_str(), 0),
    };
    let base: u128 = mantissa
        .parse()
        .map_err(|_| format!("budget must be a nonnegative integer, got {s:?}"))?;
    let scale = 10u128
        .checked_pow(exponent)
        .ok_or_else(|| format!("budget {s:?} is out of range"))?;
    base.checked_mul(scale)
        .ok_or_else(|| format!("budget {s:?} is out of range"))
}

fn build_ctx(global: &Global) -> Result<Ctx, String> {
    let budget = match global.budget {
        Some(b) => b,
        None => match std::env::var("HECKE4_BUDGET") {
            Ok(raw) => parse_budget(&raw).map_err(|e| format!("HECKE4_BUDGET: {e}"))?,
            Err(std::env::VarError::NotPresent) => EnumConfig::default().budget,
            Err(err) => return Err(format!("HECKE4_BUDGET: {err}")),
        },
    };
    let workers = match global.workers {
        Some(0) => std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1),
        Some(n) => n,
        None => 1,
    };
    Ok(Ctx {
        config: EnumConfig { budget, workers },
        convention: global.sym_convention,
        order: global.normalization,
        out: global.out.clone(),
    })
}

fn run(command: &Command, ctx: &Ctx) -> anyhow::Result<Value> {
    match command {
        Command::Emit { genus, format } => commands::emit(ctx, *genus, *format),
        Command::Verify { check } => match check {
            Check::Funceq => commands::verify_funceq(ctx),
            Check::Remark { genus } => commands::verify_remark(ctx, *genus),
            Check::Oracle {
                genus,
                p,
                max_delta,
            } => commands::verify_oracle(ctx, *genus, *p as i128, *max_delta),
            Check::Siegel { p, max_delta } => commands::verify_siegel(ctx, *p as i128, *max_delta),
            Check::Counts {
                genus,
                p,
                delta,
                classes,
            } => commands::verify_counts(ctx, *genus, *p as i128, *delta, *classes),
        },
        Command::Reconstruct {
            genus,
            p,
            symbolic,
            max_delta,
            degree_bound,
        } => commands::reconstruct(
            ctx,
            ReconstructArgs {
                genus: *genus,
                p: p.map(|v| v as i128),
                symbolic: *symbolic,
                max_delta: *max_delta,
                degree_bound: *degree_bound,
            },
        ),
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = Cli::parse();
    let ctx = match build_ctx(&cli.global) {
        Ok(ctx) => ctx,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cli.command, &ctx) {
        Ok(results) => {
            let pass = results
                .get("pass")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            report::print(&results, &ctx, started);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
