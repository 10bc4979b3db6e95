use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::Format;

/// One comparison. `expected` and `got` are numbers for floating-point
/// checks and strings for exact ones.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// `|got - expected| <= tol * max(|expected|, floor)`.
    pub fn close(name: impl Into<String>, expected: f64, got: f64, tol: f64, floor: f64) -> Self {
        let pass = (got - expected).abs() <= tol * expected.abs().max(floor);
        Self { name: name.into(), expected: num(expected), got: num(got), tolerance: tol, pass }
    }

    /// Exact equality of two printed values.
    pub fn exact(name: impl Into<String>, expected: String, got: String) -> Self {
        let pass = expected == got;
        Self { name: name.into(), expected: Value::String(expected), got: Value::String(got), tolerance: 0.0, pass }
    }

    pub fn flag(name: impl Into<String>, got: bool) -> Self {
        Self { name: name.into(), expected: Value::Bool(true), got: Value::Bool(got), tolerance: 0.0, pass: got }
    }

    /// A check that could not be computed.
    pub fn error(name: impl Into<String>, expected: Value, err: impl std::fmt::Display) -> Self {
        Self {
            name: name.into(),
            expected,
            got: Value::String(format!("error: {err}")),
            tolerance: 0.0,
            pass: false,
        }
    }
}

pub(crate) fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or_else(|| Value::String(x.to_string()))
}

/// Echo of the parameters as given, with their region flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    pub k0: String,
    pub k1: String,
    pub n_max: usize,
    pub tol: f64,
    pub integrable: bool,
    pub positive_definite: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, params: Params, mut checks: Vec<Check>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        Self { suite: suite.to_string(), params, checks, pass, elapsed_ms }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::from("name,expected,got,tolerance,pass\n");
                for c in &self.checks {
                    let row = [
                        c.name.clone(),
                        plain(&c.expected),
                        plain(&c.got),
                        c.tolerance.to_string(),
                        c.pass.to_string(),
                    ];
                    s.push_str(&csv_row(&row));
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for c in &self.checks {
                    let tag = if c.pass { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{tag} {}  got={} expected={}", c.name, plain(&c.got), plain(&c.expected));
                }
                let n_fail = self.checks.iter().filter(|c| !c.pass).count();
                let _ = writeln!(
                    s,
                    "{}: {} checks, {} failed ({} ms)",
                    self.suite,
                    self.checks.len(),
                    n_fail,
                    self.elapsed_ms
                );
                s
            }
        }
    }
}

pub(crate) fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One CSV record with `\n` ending; fields are quoted only when needed.
pub(crate) fn csv_row(fields: &[String]) -> String {
    let mut out = String::new();
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        if f.contains([',', '"', '\n', '\r']) {
            out.push('"');
            out.push_str(&f.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(f);
        }
    }
    out.push('\n');
    out
}
