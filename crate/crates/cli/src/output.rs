use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// What a command produced: a human-readable rendering, the same data as
/// JSON, and whether every check it ran passed.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    pub fn new(text: String, json: impl Serialize) -> Self {
        Output { text, json: serde_json::to_value(json).expect("serializable"), ok: true }
    }

    pub fn failed(mut self) -> Self {
        self.ok = false;
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit status 2.
    Usage(String),
    /// The input was fine but a mathematical precondition failed: exit status 1.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Check(m) => f.write_str(m),
        }
    }
}

impl From<m06_core::Error> for CliError {
    fn from(e: m06_core::Error) -> Self {
        use m06_core::Error::*;
        match e {
            NotEffective | NotStrictlySemistable | NotOnHypersurface(_) => CliError::Check(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<crate::expr::ExprError> for CliError {
    fn from(e: crate::expr::ExprError) -> Self {
        CliError::Usage(format!("expression error at {e}"))
    }
}

pub type CliResult<T = Output> = Result<T, CliError>;

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Renders `Σ c_i·name_i` as `3/2*K - psi`, skipping zero terms.
pub fn combination(terms: &[(&m06_core::Rational, &str)]) -> String {
    let mut out = String::new();
    for (c, name) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{a}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
