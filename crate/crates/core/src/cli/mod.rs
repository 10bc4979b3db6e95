//! The `b2weight` command line: `verify {exact|quad|asym|all}`, `table` and
//! `eval-k`. Exit codes are 0 on success, 1 when a check fails or an
//! evaluation is out of region, 2 on a usage error.

mod report;
mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use report::{Check, Params, Report};
pub use suites::{asym_suite, exact_suite, product_rule_pairs, quad_suite, quadrature_self_test, OPERATOR_N_CAP};

use crate::hyper::{alpha_beta_recurrence, s_inner_closed};
use crate::ring::{int, parse_rational, to_f64, ParamPoly, Rational};
use crate::weight::{det_k_closed, eval_k, ParamPoint};
use crate::Kind;
use report::csv_row;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_K0: &str = "3/10";
const DEFAULT_K1: &str = "1/10";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Exact,
    Quad,
    Asym,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Quad => "quad",
            Suite::Asym => "asym",
            Suite::All => "all",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "b2weight", version, about = "Checks the W(B2) matrix weight and its normalization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Print alpha_n, beta_n and the sector inner products for n = 0..=nmax
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate K at the point (cos theta, sin theta)
    EvalK {
        /// Angle in (0, pi/4)
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// k0 as a rational ("3/10") or decimal
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    k0: Option<String>,
    /// k1 as a rational ("1/10") or decimal
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    k1: Option<String>,
    /// Largest n (for asym: the larger of the two orders)
    #[arg(long, allow_hyphen_values = true)]
    nmax: Option<usize>,
    /// Relative tolerance for the quadrature checks
    #[arg(long, value_parser = parse_tol, allow_hyphen_values = true)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_param(s: &str) -> std::result::Result<String, String> {
    parse_rational(s).map(|_| s.trim().to_string()).map_err(|e| e.to_string())
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

/// Parsed parameters: the strings as given, their exact values, and floats.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub k0_text: String,
    pub k1_text: String,
    pub k0: Rational,
    pub k1: Rational,
    pub n_max: usize,
    pub tol: f64,
    pub format: Format,
}

impl RunConfig {
    pub fn point(&self) -> ParamPoint {
        ParamPoint::new(to_f64(&self.k0), to_f64(&self.k1))
    }

    fn params(&self) -> Params {
        let p = self.point();
        Params {
            k0: self.k0_text.clone(),
            k1: self.k1_text.clone(),
            n_max: self.n_max,
            tol: self.tol,
            integrable: p.integrable,
            positive_definite: p.positive_definite,
        }
    }

    /// Both parameters were written without a decimal point or exponent.
    fn rational_inputs(&self) -> bool {
        ![&self.k0_text, &self.k1_text].iter().any(|s| s.contains(['.', 'e', 'E']))
    }
}

fn config(c: &Common, n_default: usize, format_default: Format) -> RunConfig {
    let k0_text = c.k0.clone().unwrap_or_else(|| DEFAULT_K0.into());
    let k1_text = c.k1.clone().unwrap_or_else(|| DEFAULT_K1.into());
    RunConfig {
        // Already validated by the argument parser.
        k0: parse_rational(&k0_text).expect("validated"),
        k1: parse_rational(&k1_text).expect("validated"),
        k0_text,
        k1_text,
        n_max: c.nmax.unwrap_or(n_default),
        tol: c.tol.unwrap_or(1e-8),
        format: c.format.unwrap_or(format_default),
    }
}

/// Runs the command line `args` (including the program name). Output goes
/// to `out` unless `--out` is given; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_PASS
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let (text, code, dest) = match &cli.command {
        Command::Verify { suite, common } => {
            let (text, code) = cmd_verify(*suite, common);
            (text, code, common.out.clone())
        }
        Command::Table { common } => {
            if common.k0.is_some() != common.k1.is_some() {
                let _ = writeln!(err, "error: table needs both --k0 and --k1, or neither");
                return EXIT_USAGE;
            }
            (cmd_table(common), EXIT_PASS, common.out.clone())
        }
        Command::EvalK { theta, common } => match cmd_eval_k(*theta, common) {
            Ok(text) => (text, EXIT_PASS, common.out.clone()),
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_FAIL;
            }
        },
    };
    match dest {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}

fn cmd_verify(suite: Suite, common: &Common) -> (String, i32) {
    let n_default = match suite {
        Suite::Asym => 2000,
        _ => 4,
    };
    let cfg = config(common, n_default, Format::Json);
    let report = verify(suite, &cfg, common.nmax.is_some());
    let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    (report.render(cfg.format), code)
}

/// Runs the selected suite. In `all`, the asymptotic checks keep their
/// default orders unless `n_max` was set explicitly for them.
pub fn verify(suite: Suite, cfg: &RunConfig, asym_n_given: bool) -> Report {
    let start = Instant::now();
    let p = cfg.point();
    let mut checks = Vec::new();
    if matches!(suite, Suite::Exact | Suite::All) {
        checks.extend(exact_suite(cfg.n_max, &cfg.k0, &cfg.k1, p.positive_definite));
    }
    if matches!(suite, Suite::Quad | Suite::All) {
        checks.extend(quad_suite(cfg.n_max, &p, Some((&cfg.k0, &cfg.k1)), cfg.tol));
    }
    if matches!(suite, Suite::Asym | Suite::All) {
        let n = if suite == Suite::Asym && asym_n_given { cfg.n_max } else { 2000 };
        checks.extend(asym_suite(n, &p));
    }
    Report::new(suite.name(), cfg.params(), checks, start.elapsed().as_millis() as u64)
}

/// One row of `table`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub alpha: String,
    pub beta: String,
    pub s_p12: String,
    pub s_p14: String,
}

/// Rows for `n = 0..=n_max`. With `at = None` the entries are printed as
/// polynomials in `k0, k1`; otherwise they are evaluated, as rationals or
/// as decimals.
pub fn table_rows(n_max: usize, at: Option<(&Rational, &Rational)>, decimal: bool) -> Vec<TableRow> {
    let seq = alpha_beta_recurrence(n_max);
    let show = |p: &ParamPoly| -> String {
        match at {
            None => p.to_string(),
            Some((a, b)) => {
                let v = p.eval(a, b);
                if decimal {
                    to_f64(&v).to_string()
                } else {
                    v.to_string()
                }
            }
        }
    };
    let anchor = ParamPoly::linear(int(1), int(2), int(2));
    (0..=n_max)
        .map(|n| TableRow {
            n,
            alpha: show(&seq.alpha[n]),
            beta: show(&seq.beta[n]),
            s_p12: show(&(&anchor * &seq.alpha[n])),
            s_p14: show(&s_inner_closed(n, Kind::P14)),
        })
        .collect()
}

fn cmd_table(common: &Common) -> String {
    let symbolic = common.k0.is_none();
    let cfg = config(common, 6, Format::Csv);
    let rows = if symbolic {
        table_rows(cfg.n_max, None, false)
    } else {
        table_rows(cfg.n_max, Some((&cfg.k0, &cfg.k1)), !cfg.rational_inputs())
    };
    match cfg.format {
        Format::Json => {
            let k = |s: &String| if symbolic { serde_json::Value::Null } else { json!(s) };
            let v = json!({ "k0": k(&cfg.k0_text), "k1": k(&cfg.k1_text), "rows": rows });
            serde_json::to_string_pretty(&v).expect("table serializes") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("n,alpha,beta,s_p12,s_p14\n");
            for r in &rows {
                s.push_str(&csv_row(&[r.n.to_string(), r.alpha.clone(), r.beta.clone(), r.s_p12.clone(), r.s_p14.clone()]));
            }
            s
        }
        Format::Text => rows
            .iter()
            .map(|r| format!("n={}  alpha={}  beta={}  s_p12={}  s_p14={}\n", r.n, r.alpha, r.beta, r.s_p12, r.s_p14))
            .collect(),
    }
}

/// The `eval-k` record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KRecord {
    pub k0: String,
    pub k1: String,
    pub theta: f64,
    pub u: f64,
    #[serde(rename = "L")]
    pub l: [f64; 4],
    #[serde(rename = "K")]
    pub k: [f64; 3],
    pub d1: f64,
    pub d2: f64,
    #[serde(rename = "detK")]
    pub det_k: f64,
    #[serde(rename = "detK_closed")]
    pub det_k_closed: f64,
}

pub fn k_record(theta: f64, cfg: &RunConfig) -> crate::Result<KRecord> {
    let p = cfg.point();
    let ev = eval_k(theta, &p)?;
    Ok(KRecord {
        k0: cfg.k0_text.clone(),
        k1: cfg.k1_text.clone(),
        theta,
        u: ev.u,
        l: [ev.l[0][0], ev.l[0][1], ev.l[1][0], ev.l[1][1]],
        k: [ev.k[0][0], ev.k[0][1], ev.k[1][1]],
        d1: ev.d1,
        d2: ev.d2,
        det_k: ev.det_k(),
        det_k_closed: det_k_closed(&p),
    })
}

fn cmd_eval_k(theta: f64, common: &Common) -> std::result::Result<String, String> {
    let cfg = config(common, 0, Format::Json);
    let r = k_record(theta, &cfg).map_err(|e| e.to_string())?;
    Ok(match cfg.format {
        Format::Json => serde_json::to_string_pretty(&r).expect("record serializes") + "\n",
        Format::Csv => {
            let head = "k0,k1,theta,u,L11,L12,L21,L22,k11,k12,k22,d1,d2,detK,detK_closed\n";
            let mut f = vec![r.k0.clone(), r.k1.clone(), r.theta.to_string(), r.u.to_string()];
            f.extend(r.l.iter().chain(&r.k).chain(&[r.d1, r.d2, r.det_k, r.det_k_closed]).map(|x| x.to_string()));
            format!("{head}{}", csv_row(&f))
        }
        Format::Text => format!(
            "theta={} u={}\nL=[[{}, {}], [{}, {}]]\nK=[[{}, {}], [{}, {}]]\nd1={} d2={}\ndetK={} (closed form {})\n",
            r.theta, r.u, r.l[0], r.l[1], r.l[2], r.l[3], r.k[0], r.k[1], r.k[1], r.k[2], r.d1, r.d2, r.det_k, r.det_k_closed
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("b2weight").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn negative_nmax_is_usage_error() {
        let (code, _, err) = run_str(&["verify", "exact", "--nmax", "-1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
    }

    #[test]
    fn symbolic_table_starts_at_one() {
        let (code, out, _) = run_str(&["table", "--nmax", "1"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("n,alpha,beta,s_p12,s_p14"));
        assert!(lines.next().unwrap().starts_with("0,1,"));
    }

    #[test]
    fn bad_parameter_text() {
        assert_eq!(run_str(&["table", "--k0", "x", "--k1", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["table", "--k0", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "quad", "--tol", "0"]).0, EXIT_USAGE);
    }
}
