//! Run configuration: flag parsing helpers, the optional TOML config file,
//! and output-path resolution.
//!
//! Precedence for every setting is flag > config file > built-in default.
//! The config file uses exactly the long flag names as keys (`family`,
//! `form`, `triple`, `T`, `k`, `limit`, `expected`, `output`, `format`,
//! `sample-order`, `sample-extra`); unknown keys are rejected so typos
//! surface as config errors instead of silently applying defaults.

use std::fmt;
use std::path::{Path, PathBuf};

use qpositivity::periodic::CoprimeTriple;
use qpositivity::rational::parse_rational;
use qpositivity::theta::ThetaForm;
use qpositivity::Error;

/// Environment variable naming the directory under which relative `--output`
/// paths are resolved.
pub const OUTPUT_DIR_VAR: &str = "QPOS_OUTPUT_DIR";

/// Exit status contract: 0 success, 1 verification failure, 2 usage/config
/// error.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A terminal error carrying the exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError { code: EXIT_FAILURE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            // Bad user input: out-of-domain arguments, non-coprime triples.
            Error::InvalidArgument(_) => CliError::usage(err.to_string()),
            // Everything else means a check failed or the library caught an
            // inconsistency — a verification failure, not a usage problem.
            _ => CliError::failure(err.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Output format for reports. `verify` always emits its JSON certificate
/// regardless of this setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl OutputFormat {
    fn parse(s: &str) -> CliResult<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::usage(format!(
                "config: unknown format {other:?} (expected text, csv, or json)"
            ))),
        }
    }
}

/// Settings read from a TOML config file. Every field is optional; flags
/// override whatever is present.
#[derive(Debug, Default)]
pub struct FileConfig {
    pub family: Option<String>,
    pub form: Option<String>,
    pub triple: Option<String>,
    pub t_order: Option<usize>,
    pub k_max: Option<u64>,
    pub limit: Option<u64>,
    pub expected: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub sample_order: Option<usize>,
    pub sample_extra: Option<u64>,
}

impl FileConfig {
    /// Loads and validates a config file; `None` path means empty defaults.
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::usage(format!("cannot read config {}: {e}", path.display()))
        })?;
        let table: toml::Table = text.parse().map_err(|e| {
            CliError::usage(format!("cannot parse config {}: {e}", path.display()))
        })?;

        let mut config = FileConfig::default();
        for (key, value) in &table {
            match key.as_str() {
                "family" => config.family = Some(expect_str(key, value)?),
                "form" => config.form = Some(expect_str(key, value)?),
                "triple" => config.triple = Some(expect_str(key, value)?),
                "T" => config.t_order = Some(expect_int(key, value)? as usize),
                "k" => config.k_max = Some(expect_int(key, value)?),
                "limit" => config.limit = Some(expect_int(key, value)?),
                "expected" => config.expected = Some(PathBuf::from(expect_str(key, value)?)),
                "output" => config.output = Some(PathBuf::from(expect_str(key, value)?)),
                "format" => config.format = Some(OutputFormat::parse(&expect_str(key, value)?)?),
                "sample-order" => {
                    config.sample_order = Some(expect_int(key, value)? as usize)
                }
                "sample-extra" => config.sample_extra = Some(expect_int(key, value)?),
                other => {
                    return Err(CliError::usage(format!(
                        "config {}: unknown key {other:?}",
                        path.display()
                    )))
                }
            }
        }
        Ok(config)
    }
}

fn expect_str(key: &str, value: &toml::Value) -> CliResult<String> {
    value
        .as_str()
        .map(str::to_owned)
        .ok_or_else(|| CliError::usage(format!("config key {key:?} must be a string")))
}

fn expect_int(key: &str, value: &toml::Value) -> CliResult<u64> {
    value
        .as_integer()
        .and_then(|n| u64::try_from(n).ok())
        .ok_or_else(|| CliError::usage(format!("config key {key:?} must be a nonnegative integer")))
}

/// Parses `"a,b,c"` into a validated coprime triple.
pub fn parse_triple(s: &str) -> CliResult<CoprimeTriple> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "expected three comma-separated parts, got {s:?}"
        )));
    }
    let mut values = [0u64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| CliError::usage(format!("bad part {part:?} in {s:?}")))?;
    }
    Ok(CoprimeTriple::new(values[0], values[1], values[2])?)
}

/// Parses `"A,B"` into a theta form; each side accepts `p/q`, an integer, or
/// an exact half like `1.5`.
pub fn parse_form(s: &str) -> CliResult<ThetaForm> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(CliError::usage(format!(
            "expected a comma-separated pair A,B, got {s:?}"
        )));
    }
    let quad = parse_rational(parts[0])?;
    let lin = parse_rational(parts[1])?;
    Ok(ThetaForm::new(quad, lin)?)
}

/// Resolves the effective output path: a relative path lands under
/// `$QPOS_OUTPUT_DIR` when that is set.
pub fn resolve_output(path: Option<PathBuf>) -> Option<PathBuf> {
    let path = path?;
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUTPUT_DIR_VAR) {
            if !dir.is_empty() {
                return Some(PathBuf::from(dir).join(path));
            }
        }
    }
    Some(path)
}

/// Writes the report to the resolved output file, or to stdout when no
/// output was requested.
pub fn emit(report: &str, output: Option<PathBuf>) -> CliResult<()> {
    match resolve_output(output) {
        Some(path) => {
            std::fs::write(&path, report).map_err(|e| {
                CliError::usage(format!("cannot write {}: {e}", path.display()))
            })?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{report}");
            Ok(())
        }
    }
}
