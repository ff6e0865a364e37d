use std::fmt;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
    Dot,
}

/// What a command produced, in every format it supports.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub svg: Option<String>,
    pub dot: Option<String>,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            svg: None,
            dot: None,
        }
    }

    pub fn render(self, format: Format) -> Result<String, CliError> {
        let missing = |name: &str| CliError::Usage(format!("this command has no {name} output"));
        match format {
            Format::Text => Ok(self.text),
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("values serialize")),
            Format::Svg => self.svg.ok_or_else(|| missing("svg")),
            Format::Dot => self.dot.ok_or_else(|| missing("dot")),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input syntax; exit code 2.
    Usage(String),
    /// Well-formed input the operation rejects; exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<schubcalc::Error> for CliError {
    fn from(e: schubcalc::Error) -> Self {
        match e {
            schubcalc::Error::Parse { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column()))
    }
}

/// One item per line.
pub fn lines<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}
