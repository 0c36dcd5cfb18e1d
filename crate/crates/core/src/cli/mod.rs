//! Command-line front end.

pub mod json;
pub mod parse;
pub mod text;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::bounds::{BoundsError, SingularComponentData};
use crate::detector::{
    run_iterated_polar, run_super_polar, DetectionReport, DetectorConfig, DetectorError,
};
use crate::nonproper::DEFAULT_TOLERANCE;
use crate::polyalg::{PolyError, Polynomial, Rational, Ring};

pub use parse::{infer_variables, parse_polynomial, parse_variables, ParseError, ParseErrorKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    #[value(name = "super-polar", alias = "super_polar")]
    SuperPolar,
    #[value(name = "iterated-polar", alias = "iterated_polar")]
    IteratedPolar,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "nkdetect",
    version,
    about = "Finite superset of the non-trivial asymptotic non-regular values of a polynomial f: C^n -> C"
)]
pub struct Args {
    /// Polynomial, e.g. "x + x^2*y"
    #[arg(conflicts_with = "file", required_unless_present = "file")]
    pub polynomial: Option<String>,
    /// Read the polynomial from a file
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Comma-separated variables; defaults to the names in order of appearance
    #[arg(long, value_name = "LIST")]
    pub vars: Option<String>,
    #[arg(long, value_enum, default_value = "super-polar")]
    pub method: MethodChoice,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub runs: usize,
    /// Random coefficients are nonzero integers in [-B, B]
    #[arg(long, value_name = "B", default_value_t = 9999)]
    pub coeff_bound: u32,
    /// Saturate against Sing f even when it is finite
    #[arg(long)]
    pub force_general: bool,
    #[arg(long)]
    pub json: bool,
    /// Tolerance of the numeric root approximation
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Components of Sing f as "degree:dim,..." for the bounds
    #[arg(long, value_name = "LIST")]
    pub sing_components: Option<String>,
    /// Record wall-clock time per run (makes output nondeterministic)
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub method: MethodChoice,
    pub seed: u64,
    pub runs: usize,
    pub coeff_bound: u32,
    pub force_general: bool,
    pub output: OutputFormat,
    pub tolerance: f64,
    pub sing: SingularComponentData,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            method: MethodChoice::SuperPolar,
            seed: 0,
            runs: 3,
            coeff_bound: 9999,
            force_general: false,
            output: OutputFormat::Text,
            tolerance: DEFAULT_TOLERANCE,
            sing: SingularComponentData::none(),
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.runs < 1 {
            return Err(CliError::Config("--runs must be at least 1".into()));
        }
        if self.coeff_bound < 2 {
            return Err(CliError::Config("--coeff-bound must be at least 2".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Config("--tolerance must be positive".into()));
        }
        Ok(())
    }

    fn detector(&self) -> DetectorConfig {
        DetectorConfig {
            seed: self.seed,
            runs: self.runs,
            coeff_bound: self.coeff_bound,
            force_general: self.force_general,
            tolerance: self.tolerance,
            sing: self.sing.clone(),
            timings: self.timings,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{method}: {source}")]
    Detector {
        method: &'static str,
        source: DetectorError,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_)
            | CliError::Config(_)
            | CliError::Io { .. }
            | CliError::Bounds(_) => EXIT_PARSE,
            CliError::Poly(_) => EXIT_INTERNAL,
            CliError::Detector { source, .. } => match source {
                DetectorError::GuardExhausted { .. } => EXIT_GUARD,
                DetectorError::ConstantPolynomial | DetectorError::TooFewVariables(_) => EXIT_PARSE,
                _ => EXIT_INTERNAL,
            },
        }
    }
}

/// Builds the ring from `vars` (or the names in `text`) and parses `text`.
pub fn read_polynomial(text: &str, vars: Option<&str>) -> Result<Polynomial<Rational>, CliError> {
    let names = match vars {
        Some(list) => parse_variables(list)?,
        None => infer_variables(text),
    };
    if names.is_empty() {
        return Err(CliError::Config(
            "no variables; declare them with --vars".into(),
        ));
    }
    let ring = Ring::new(names)?;
    Ok(parse_polynomial(text, &ring)?)
}

/// Runs the selected method(s) in a fixed order.
pub fn detect(
    f: &Polynomial<Rational>,
    config: &RunConfig,
) -> Result<Vec<DetectionReport>, CliError> {
    config.validate()?;
    let dc = config.detector();
    let wrap = |method: &'static str| move |source| CliError::Detector { method, source };
    let mut reports = Vec::new();
    if matches!(config.method, MethodChoice::SuperPolar | MethodChoice::Both) {
        reports.push(run_super_polar(f, &dc).map_err(wrap("super_polar"))?);
    }
    if matches!(
        config.method,
        MethodChoice::IteratedPolar | MethodChoice::Both
    ) {
        reports.push(run_iterated_polar(f, &dc).map_err(wrap("iterated_polar"))?);
    }
    Ok(reports)
}

pub fn render(reports: &[DetectionReport], output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => {
            let mut s = json::render(reports);
            s.push('\n');
            s
        }
        OutputFormat::Text => reports
            .iter()
            .map(text::render)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Parses, detects and renders; the error carries the exit code.
pub fn run(args: &Args) -> Result<String, CliError> {
    let text = match (&args.polynomial, &args.file) {
        (Some(p), _) => p.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        (None, None) => return Err(CliError::Config("no polynomial given".into())),
    };
    let sing = match &args.sing_components {
        Some(s) => s.parse::<SingularComponentData>()?,
        None => SingularComponentData::none(),
    };
    let config = RunConfig {
        method: args.method,
        seed: args.seed,
        runs: args.runs,
        coeff_bound: args.coeff_bound,
        force_general: args.force_general,
        output: if args.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        tolerance: args.tolerance,
        sing,
        timings: args.timings,
    };
    config.validate()?;
    let f = read_polynomial(&text, args.vars.as_deref())?;
    let reports = detect(&f, &config)?;
    Ok(render(&reports, config.output))
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&args) {
        Ok(out) => {
            print!("{out}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
