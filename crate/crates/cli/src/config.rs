//! Run configuration: defaults, flat key=value config files, environment
//! override for the output directory, and flag precedence.
//!
//! Precedence, highest first: command-line flag, environment (output dir
//! only), config file, built-in default. Validation enforces the two
//! invariants every run relies on: at least one sample per identity, and
//! a tolerance no tighter than ten orders above the working precision
//! floor (10^(10-digits)).

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use mpcore::PrecisionContext;

use crate::CmdError;

pub const DEFAULT_DIGITS: u32 = 50;
pub const DEFAULT_TOLERANCE: &str = "1e-40";
pub const DEFAULT_SAMPLES: u32 = 25;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_OUTPUT_DIR: &str = "reports";
/// Environment override for the output directory, and nothing else.
pub const OUT_DIR_ENV: &str = "LERCH_VERIFY_OUT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Markdown => "markdown",
            Format::Csv => "csv",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CmdError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            other => Err(CmdError::Usage(format!(
                "unknown report format {other:?}; expected json, markdown, or csv"
            ))),
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            Format::Json => "report.json",
            Format::Markdown => "report.md",
            Format::Csv => "report.csv",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fully resolved settings for one `check` run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub digits: u32,
    /// Kept as the decimal string the user supplied so reports echo it
    /// verbatim; parsed into a `Float` at run time.
    pub tolerance: String,
    pub samples_per_identity: u32,
    pub seed: u64,
    pub identity_filter: Vec<String>,
    pub output_dir: PathBuf,
    pub formats: BTreeSet<Format>,
    /// Worker threads across identities; 0 lets the pool pick.
    pub jobs: usize,
}

impl RunConfig {
    /// The precision context this configuration runs under.
    pub fn context(&self) -> Result<PrecisionContext, CmdError> {
        PrecisionContext::new(self.digits).map_err(|e| CmdError::Usage(e.to_string()))
    }
}

/// Raw `check` inputs before precedence resolution; `None` means the flag
/// was not given.
#[derive(Debug, Default, Clone)]
pub struct CheckFlags {
    pub digits: Option<u32>,
    pub tol: Option<String>,
    pub samples: Option<u32>,
    pub seed: Option<u64>,
    pub only: Vec<String>,
    pub out: Option<PathBuf>,
    pub format: Vec<String>,
    pub jobs: Option<usize>,
    pub config: Option<PathBuf>,
}

#[derive(Debug, Default)]
struct FileSettings {
    digits: Option<u32>,
    tol: Option<String>,
    samples: Option<u32>,
    seed: Option<u64>,
    only: Option<Vec<String>>,
    out: Option<PathBuf>,
    format: Option<Vec<String>>,
    jobs: Option<usize>,
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CmdError> {
    value
        .parse()
        .map_err(|_| CmdError::Usage(format!("config key {key}: cannot parse {value:?}")))
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

fn load_config_file(path: &Path) -> Result<FileSettings, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read config file {}: {e}", path.display())))?;
    let mut out = FileSettings::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CmdError::Usage(format!(
                "config file {}:{}: expected key = value, got {line:?}",
                path.display(),
                lineno + 1
            )));
        };
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        match key.as_str() {
            "digits" => out.digits = Some(parse_num("digits", value)?),
            "tol" | "tolerance" => out.tol = Some(value.to_string()),
            "samples" => out.samples = Some(parse_num("samples", value)?),
            "seed" => out.seed = Some(parse_num("seed", value)?),
            "only" => out.only = Some(split_list(value)),
            "out" => out.out = Some(PathBuf::from(value)),
            "format" => out.format = Some(split_list(value)),
            "jobs" => out.jobs = Some(parse_num("jobs", value)?),
            other => {
                return Err(CmdError::Usage(format!(
                    "config file {}: unknown key {other:?}",
                    path.display()
                )));
            }
        }
    }
    Ok(out)
}

/// Apply precedence and validate. `env_out` is the value of
/// [`OUT_DIR_ENV`] if set.
fn resolve_with(flags: &CheckFlags, env_out: Option<String>) -> Result<RunConfig, CmdError> {
    let file = match &flags.config {
        Some(path) => load_config_file(path)?,
        None => FileSettings::default(),
    };

    let digits = flags.digits.or(file.digits).unwrap_or(DEFAULT_DIGITS);
    let tolerance = flags
        .tol
        .clone()
        .or(file.tol)
        .unwrap_or_else(|| DEFAULT_TOLERANCE.to_string());
    let samples = flags.samples.or(file.samples).unwrap_or(DEFAULT_SAMPLES);
    let seed = flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED);
    let identity_filter = if !flags.only.is_empty() {
        flags.only.clone()
    } else {
        file.only.unwrap_or_else(|| vec!["*".to_string()])
    };
    let output_dir = flags
        .out
        .clone()
        .or_else(|| env_out.map(PathBuf::from))
        .or(file.out)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT_DIR));
    let format_names = if !flags.format.is_empty() {
        flags.format.clone()
    } else {
        file.format
            .unwrap_or_else(|| vec!["json".to_string(), "markdown".to_string()])
    };
    let mut formats = BTreeSet::new();
    for name in &format_names {
        formats.insert(Format::parse(name)?);
    }
    if formats.is_empty() {
        return Err(CmdError::Usage("no report format selected".into()));
    }
    let jobs = flags.jobs.or(file.jobs).unwrap_or(0);

    if samples < 1 {
        return Err(CmdError::Usage("--samples must be at least 1".into()));
    }
    let ctx = PrecisionContext::new(digits).map_err(|e| CmdError::Usage(e.to_string()))?;
    let tol = ctx
        .parse_float(&tolerance)
        .map_err(|e| CmdError::Usage(format!("bad tolerance {tolerance:?}: {e}")))?;
    if !(tol > ctx.zero()) {
        return Err(CmdError::Usage(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let floor = ctx.pow10(10 - digits as i64);
    if tol < floor {
        return Err(CmdError::Usage(format!(
            "tolerance {tolerance} is below the resolvable floor 1e-{} at {digits} digits",
            digits - 10
        )));
    }

    Ok(RunConfig {
        digits,
        tolerance,
        samples_per_identity: samples,
        seed,
        identity_filter,
        output_dir,
        formats,
        jobs,
    })
}

pub fn resolve(flags: &CheckFlags) -> Result<RunConfig, CmdError> {
    resolve_with(flags, std::env::var(OUT_DIR_ENV).ok())
}
