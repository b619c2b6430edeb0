//! Artifact emission, number formatting and exit codes.

use std::fmt;
use std::io::Write;
use std::path::Path;

use natbound_core::Error;
use serde_json::Value;

/// Exit code for invalid arguments or input files.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit code for failures during computation or output.
pub const EXIT_COMPUTE: i32 = 1;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Compute(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Compute(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegralExponent(_) | Error::Degenerate(_) | Error::Overflow(_) => {
                CliError::Compute(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// What a subcommand produces; at least one rendering is present.
pub struct Artifact {
    pub json: Option<Value>,
    pub csv: Option<String>,
    pub prefer: Format,
}

impl Artifact {
    pub fn json(v: Value) -> Self {
        Artifact {
            json: Some(v),
            csv: None,
            prefer: Format::Json,
        }
    }

    pub fn csv(text: String) -> Self {
        Artifact {
            json: None,
            csv: Some(text),
            prefer: Format::Csv,
        }
    }

    pub fn both(v: Value, text: String, prefer: Format) -> Self {
        Artifact {
            json: Some(v),
            csv: Some(text),
            prefer,
        }
    }

    pub fn render(self, format: Option<Format>) -> CliResult<String> {
        match format.unwrap_or(self.prefer) {
            Format::Json => {
                let v = self
                    .json
                    .ok_or_else(|| invalid("this command has no JSON output; use --format csv"))?;
                let mut text = serde_json::to_string_pretty(&round_floats(v))
                    .map_err(|e| CliError::Compute(e.to_string()))?;
                text.push('\n');
                Ok(text)
            }
            Format::Csv => self
                .csv
                .ok_or_else(|| invalid("this command has no CSV output; use --format json")),
        }
    }
}

pub fn write_artifact(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Compute(format!("writing {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Compute(e.to_string())),
    }
}

/// `x` rounded to 15 significant digits.
pub fn sig15(x: f64) -> f64 {
    if x.is_finite() && x != 0.0 {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

/// `x` printed with 15 significant digits.
pub fn fmt15(x: f64) -> String {
    if x.is_finite() {
        format!("{:e}", sig15(x))
    } else {
        x.to_string()
    }
}

fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            serde_json::Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}
