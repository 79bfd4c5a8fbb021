//! `qpos` — command-line driver for the qpositivity library.
//!
//! Subcommands: `tables` (recompute and diff the threshold tables), `verify`
//! (certify one family and emit a JSON positivity certificate), `identity`
//! (classical identity suite), `merca` (special-product suite), `period`
//! (periodic decomposition of a triple), and `scan` (certify every coprime
//! triple up to a product limit).
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! configuration errors. All numeric output is exact — integers or `p/q`
//! rationals, never floats.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qpositivity::verifier::{DEFAULT_SAMPLE_EXTRA, DEFAULT_SAMPLE_ORDER};

use commands::GlobalOpts;
use config::{parse_form, parse_triple, CliError, CliResult, FileConfig, OutputFormat};

#[derive(Parser)]
#[command(
    name = "qpos",
    version,
    about = "Exact positivity thresholds and certificates for truncated theta quotients",
    after_help = "Exit status: 0 success, 1 verification failure, 2 usage/config error.\n\
                  A TOML config file (--config) may supply any long flag by name;\n\
                  flags given on the command line win. Relative --output paths\n\
                  resolve under $QPOS_OUTPUT_DIR when that variable is set."
)]
struct Cli {
    /// TOML config file supplying defaults for any long flag
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Report format (verify always emits its JSON certificate)
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the threshold tables and diff them against expected values
    Tables(TablesArgs),
    /// Certify one family end to end; emits a JSON positivity certificate
    Verify(VerifyArgs),
    /// Run the classical identity suite
    Identity(SuiteArgs),
    /// Run the special-product (even-index truncation) suite
    Merca(SuiteArgs),
    /// Show the periodic decomposition of a coprime triple
    Period(PeriodArgs),
    /// Certify every coprime triple with product up to a limit
    Scan(ScanArgs),
}

#[derive(Args)]
struct TablesArgs {
    /// Restrict to one triple, e.g. 1,2,3
    #[arg(long, value_name = "a,b,c")]
    family: Option<String>,

    /// Restrict to one quadratic form, e.g. 3/2,1/2
    #[arg(long, value_name = "A,B")]
    form: Option<String>,

    /// Diff against this expected-values file instead of the embedded one
    #[arg(long, value_name = "PATH")]
    expected: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// The coprime triple to certify, e.g. 1,2,3
    #[arg(long, value_name = "a,b,c")]
    family: Option<String>,

    /// Quadratic form A,B (default 3/2,1/2; accepts p/q or exact halves)
    #[arg(long, value_name = "A,B")]
    form: Option<String>,

    /// Order for the sanity sample above the proven threshold
    #[arg(long = "sample-order", value_name = "ORDER")]
    sample_order: Option<usize>,

    /// How many tail depths at and above K the sanity sample covers
    #[arg(long = "sample-extra", value_name = "COUNT")]
    sample_extra: Option<u64>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Truncation order every series is expanded to
    #[arg(long = "T", value_name = "ORDER")]
    t_order: Option<usize>,

    /// Largest truncation depth k to check
    #[arg(long = "k", value_name = "DEPTH")]
    k_max: Option<u64>,
}

#[derive(Args)]
struct PeriodArgs {
    /// The coprime triple to decompose, e.g. 1,3,8
    #[arg(long, value_name = "a,b,c")]
    triple: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Quadratic form A,B shared by every scanned family (default 3/2,1/2)
    #[arg(long, value_name = "A,B")]
    form: Option<String>,

    /// Largest allowed product a*b*c
    #[arg(long, value_name = "PRODUCT")]
    limit: Option<u64>,

    /// Order for each family's sanity sample above its threshold
    #[arg(long = "sample-order", value_name = "ORDER")]
    sample_order: Option<usize>,

    /// How many tail depths at and above K each sanity sample covers
    #[arg(long = "sample-extra", value_name = "COUNT")]
    sample_extra: Option<u64>,
}

fn run(cli: Cli) -> CliResult<()> {
    let file = FileConfig::load(cli.config.as_deref())?;
    let opts = GlobalOpts {
        format: cli.format.or(file.format).unwrap_or(OutputFormat::Text),
        output: cli.output.or(file.output.clone()),
    };

    match cli.command {
        Command::Tables(args) => {
            let family = args
                .family
                .or(file.family)
                .map(|s| parse_triple(&s))
                .transpose()?;
            let form = args.form.or(file.form).map(|s| parse_form(&s)).transpose()?;
            let expected = args.expected.or(file.expected);
            commands::cmd_tables(family, form, expected, &opts)
        }
        Command::Verify(args) => {
            let family = args.family.or(file.family).ok_or_else(|| {
                CliError::usage("verify needs --family a,b,c (flag or config)".to_string())
            })?;
            let triple = parse_triple(&family)?;
            let form = match args.form.or(file.form) {
                Some(s) => parse_form(&s)?,
                None => qpositivity::theta::ThetaForm::pentagonal(),
            };
            let sample_order = args
                .sample_order
                .or(file.sample_order)
                .unwrap_or(DEFAULT_SAMPLE_ORDER);
            let sample_extra = args
                .sample_extra
                .or(file.sample_extra)
                .unwrap_or(DEFAULT_SAMPLE_EXTRA);
            commands::cmd_verify(triple, form, sample_order, sample_extra, &opts)
        }
        Command::Identity(args) => {
            let t_order = args.t_order.or(file.t_order).unwrap_or(500);
            let k_max = args.k_max.or(file.k_max).unwrap_or(10);
            commands::cmd_identity(t_order, k_max, &opts)
        }
        Command::Merca(args) => {
            let t_order = args.t_order.or(file.t_order).unwrap_or(2000);
            let k_max = args.k_max.or(file.k_max).unwrap_or(10);
            commands::cmd_merca(t_order, k_max, &opts)
        }
        Command::Period(args) => {
            let triple = args.triple.or(file.triple).ok_or_else(|| {
                CliError::usage("period needs --triple a,b,c (flag or config)".to_string())
            })?;
            commands::cmd_period(parse_triple(&triple)?, &opts)
        }
        Command::Scan(args) => {
            let form = match args.form.or(file.form) {
                Some(s) => parse_form(&s)?,
                None => qpositivity::theta::ThetaForm::pentagonal(),
            };
            let limit = args.limit.or(file.limit).unwrap_or(30);
            let sample_order = args
                .sample_order
                .or(file.sample_order)
                .unwrap_or(DEFAULT_SAMPLE_ORDER);
            let sample_extra = args
                .sample_extra
                .or(file.sample_extra)
                .unwrap_or(DEFAULT_SAMPLE_EXTRA);
            commands::cmd_scan(form, limit, sample_order, sample_extra, &opts)
        }
    }
}

fn main() -> ExitCode {
    // Clap itself exits 2 on unparseable flags, matching the usage contract.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code as u8)
        }
    }
}
