//! Command-line front end for `qlogic`.
//!
//! [`run`] takes the argument vector and two output streams and returns the
//! process exit code, so the whole command surface can be driven in-process.
//!
//! Exit codes: `0` success, `1` usage, parse or validation error, `2` numerical
//! failure, `3` a theorem condition failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use qlogic::formula::{self, Assignment};
use qlogic::ghz::{self, Phase};
use qlogic::hilbert::{self, HilbertError, Projector, ProjectorFile, StateFile, IDENTITY_TOL, RANK_TOL};
use qlogic::representation::{self, PropFunction, ReprError, Tolerances, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_CONDITION_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qlogic", version, about = "Many-valued logic, Born-rule truth values and the GHZ argument")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Construction tolerance: projector validation, rank cutoff, exclusivity
    /// and containment tests.
    #[arg(long, global = true, value_name = "TOL", value_parser = positive_f64, default_value_t = RANK_TOL)]
    pub tol: f64,

    /// Tolerance for pointwise identities in `verify-theorem`.
    #[arg(long, global = true, value_name = "TOL", value_parser = positive_f64, default_value_t = IDENTITY_TOL)]
    pub identity_tol: f64,

    /// Write the result to this file instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula under an assignment of truth values.
    Eval {
        /// Formula text, e.g. "p | ~p".
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        formula: Option<String>,
        /// Read the formula from a UTF-8 text file.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Assignment file: {"atoms": {"p": "1/2"}}.
        #[arg(long, value_name = "PATH")]
        assign: Option<PathBuf>,
    },
    /// Lattice operations on projector files.
    Lattice {
        op: LatticeOp,
        first: PathBuf,
        second: Option<PathBuf>,
    },
    /// Born-rule truth value <psi|P|psi>.
    Born { projector: PathBuf, state: PathBuf },
    /// Quantum, classical and many-valued analysis of the GHZ state.
    Ghz {
        /// Relative sign of |111>: +1 or -1.
        #[arg(long, default_value = "-1", allow_hyphen_values = true, value_parser = parse_phase)]
        phase: Phase,
    },
    /// Sample-based check of the closure conditions of the representation.
    VerifyTheorem {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        families: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeOp {
    Neg,
    Meet,
    Join,
    Leq,
    Exclusive,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

fn parse_phase(s: &str) -> Result<Phase, String> {
    s.parse()
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => EXIT_INVALID,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<HilbertError> for CliError {
    fn from(e: HilbertError) -> Self {
        match e {
            HilbertError::NumericRange(_) | HilbertError::NotIdempotent(_) | HilbertError::BadSpectrum(_) => {
                CliError::Numerical(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<ReprError> for CliError {
    fn from(e: ReprError) -> Self {
        match e {
            ReprError::Hilbert(h) => h.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn with_path<E: std::fmt::Display>(path: &Path) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Invalid(format!("{}: {e}", path.display()))
}

fn load_projector(path: &Path, tol: f64) -> Result<Projector, CliError> {
    let file = ProjectorFile::parse(&read(path)?).map_err(with_path(path))?;
    file.to_projector(tol).map_err(with_path(path))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_matrix(p: &Projector) -> String {
    let m = p.matrix();
    let mut out = format!("projector of rank {} on C^{}\n", p.rank(), p.dim());
    for r in 0..p.dim() {
        let row: Vec<String> = (0..p.dim())
            .map(|c| {
                let z = m[(r, c)];
                let re = if z.re.abs() < 5e-13 { 0.0 } else { z.re };
                let im = if z.im.abs() < 5e-13 { 0.0 } else { z.im };
                format!("{re:>10.6}{im:+.6}i")
            })
            .collect();
        out.push_str(&format!("  [{}]\n", row.join(", ")));
    }
    out
}

/// Result of a successful command: text to emit and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let tol = cli.tol;
    match &cli.command {
        Command::Eval { formula, file, assign } => {
            let (text, origin) = match (formula, file) {
                (Some(f), _) => (f.clone(), None),
                (None, Some(path)) => (read(path)?, Some(path.as_path())),
                (None, None) => return Err(CliError::Invalid("no formula given".into())),
            };
            let parsed = formula::parse_spanned(text.trim_end()).map_err(|e| match origin {
                Some(path) => CliError::Invalid(format!("{}: {e}", path.display())),
                None => CliError::Invalid(e.to_string()),
            })?;
            let assignment = match assign {
                Some(path) => Assignment::from_json(&read(path)?).map_err(with_path(path))?,
                None => Assignment::new(),
            };
            let value = parsed.evaluate(&assignment).map_err(|e| CliError::Invalid(e.to_string()))?;
            if cli.json {
                #[derive(Serialize)]
                struct EvalOut {
                    formula: String,
                    value: String,
                    decimal: f64,
                }
                Ok(Outcome::ok(to_json(&EvalOut {
                    formula: parsed.formula.to_string(),
                    value: value.to_string(),
                    decimal: value.to_f64(),
                })))
            } else {
                Ok(Outcome::ok(format!("{value} ({})\n", value.to_f64())))
            }
        }
        Command::Lattice { op, first, second } => {
            let p = load_projector(first, tol)?;
            let q = match (op, second) {
                (LatticeOp::Neg, None) => None,
                (LatticeOp::Neg, Some(_)) => {
                    return Err(CliError::Invalid("`lattice neg` takes exactly one projector file".into()))
                }
                (_, Some(path)) => Some(load_projector(path, tol)?),
                (_, None) => {
                    return Err(CliError::Invalid(format!(
                        "`lattice {}` needs two projector files",
                        op.to_possible_value().expect("named").get_name()
                    )))
                }
            };
            let projector_out = |r: Projector| -> Result<Outcome, CliError> {
                let residual = r.invariant_residual();
                if residual > tol {
                    return Err(CliError::Numerical(format!(
                        "result violates projector invariants (residual {residual:e})"
                    )));
                }
                Ok(Outcome::ok(if cli.json { to_json(&ProjectorFile::from(&r)) } else { render_matrix(&r) }))
            };
            let bool_out = |b: bool, extra: serde_json::Value| -> Outcome {
                if cli.json {
                    let mut v = serde_json::json!({ "result": b });
                    if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
                        obj.extend(more);
                    }
                    Outcome::ok(to_json(&v))
                } else {
                    Outcome::ok(format!("{b}\n"))
                }
            };
            match (op, q) {
                (LatticeOp::Neg, _) => projector_out(p.orthocomplement()),
                (LatticeOp::Join, Some(q)) => projector_out(p.join_with(&q, tol)?),
                (LatticeOp::Meet, Some(q)) => projector_out(p.meet_with(&q, tol)?),
                (LatticeOp::Leq, Some(q)) => Ok(bool_out(p.leq_with(&q, tol)?, serde_json::json!({}))),
                (LatticeOp::Exclusive, Some(q)) => {
                    let t = representation::exclusivity_tests(&PropFunction::new(p), &PropFunction::new(q), tol)?;
                    if t.spectral != t.algebraic {
                        return Err(CliError::Numerical(format!(
                            "spectral (lambda_max {}) and algebraic (|PQ| {:e}) exclusivity tests disagree",
                            t.lambda_max, t.overlap_norm
                        )));
                    }
                    Ok(bool_out(
                        t.spectral,
                        serde_json::json!({ "lambda_max": t.lambda_max, "overlap_norm": t.overlap_norm }),
                    ))
                }
                (_, None) => unreachable!("second operand checked above"),
            }
        }
        Command::Born { projector, state } => {
            let p = load_projector(projector, tol)?;
            let s = StateFile::parse(&read(state)?)
                .map_err(with_path(state))?
                .to_state(tol)
                .map_err(with_path(state))?;
            let v = hilbert::born_value_with(&p, &s, tol)?;
            if cli.json {
                Ok(Outcome::ok(to_json(&serde_json::json!({
                    "value": v,
                    "degree": ghz::render_degree(v),
                }))))
            } else {
                Ok(Outcome::ok(format!("{v}\n")))
            }
        }
        Command::Ghz { phase } => {
            let report = ghz::ghz_report(*phase);
            if cli.json {
                Ok(Outcome::ok(to_json(&report)))
            } else {
                Ok(Outcome::ok(render_ghz(&report)))
            }
        }
        Command::VerifyTheorem { dim, states, families, seed } => {
            let config = VerifyConfig {
                dim: *dim as usize,
                n_state_samples: *states as usize,
                n_family_samples: *families as usize,
                seed: *seed,
                tolerances: Tolerances { construction: tol, identity: cli.identity_tol },
            };
            let report = representation::verify_conditions(&config)?;
            let code = if report.all_passed { EXIT_OK } else { EXIT_CONDITION_FAILED };
            let text = if cli.json { to_json(&report) } else { render_theorem(&report) };
            Ok(Outcome { text, code })
        }
    }
}

fn render_ghz(r: &ghz::GhzReport) -> String {
    let mut s = format!("state: {} (phase {})\n", r.state.label, r.state.phase);
    s.push_str("expectations:\n");
    for p in ghz::STANDARD_PATTERNS {
        s.push_str(&format!("  {p}: {:+.12}\n", r.expectations[p]));
    }
    s.push_str(&format!(
        "classical assignments satisfying all four equations: {} of 64\n",
        r.classical_solutions
    ));
    s.push_str(&format!(
        "parity: product of left-hand sides {:+}, product of right-hand sides {:+}\n",
        r.parity.lhs_product, r.parity.rhs_product
    ));
    s.push_str(&format!(
        "xor encoding: {} of {} rows satisfy the system; V ^ V ^ V ^ F = {}\n",
        r.xor_check.satisfying_assignments, r.xor_check.total_assignments, r.xor_check.aggregate_rhs
    ));
    s.push_str("degrees (up / not up):\n");
    for (name, d) in &r.degrees {
        s.push_str(&format!("  {name}: {d} / {}\n", r.negated_degrees[name]));
    }
    s.push_str(&r.conclusion);
    s.push('\n');
    s
}

fn render_theorem(r: &representation::TheoremReport) -> String {
    let mut s = format!(
        "dim {}, {} states, {} family samples, seed {}\n",
        r.dim, r.n_state_samples, r.n_family_samples, r.seed
    );
    for (i, c) in r.conditions().iter().enumerate() {
        s.push_str(&format!(
            "condition {}: {} ({}; {} checks, worst residual {:e}, worst validity residual {:e})\n",
            i + 1,
            if c.passed { "PASS" } else { "FAIL" },
            c.description,
            c.checks,
            c.worst_residual,
            c.worst_validity_residual
        ));
    }
    s.push_str(if r.all_passed { "all conditions pass\n" } else { "some conditions FAIL\n" });
    s
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let line = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{line}");
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &outcome.text)
                    .map_err(|source| CliError::Io { path: path.clone(), source }),
                None => out.write_all(outcome.text.as_bytes()).map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                }),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("qlogic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_without_atoms() {
        let (code, out, _) = run_str(&["eval", "V ^ V ^ V ^ F"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 (1)\n");
    }

    #[test]
    fn syntax_errors_go_to_stderr() {
        let (code, out, err) = run_str(&["eval", "p &"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty());
        assert!(err.contains("line 1, column 3"), "{err}");
    }

    #[test]
    fn unbound_atom() {
        let (code, _, err) = run_str(&["eval", "p"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("\"p\""));
    }

    #[test]
    fn usage_errors() {
        let (code, out, err) = run_str(&["verify-theorem", "--dim", "0", "--states", "1", "--families", "1", "--seed", "1"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        let (code, _, err) = run_str(&["ghz", "--tol", "-1"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("-1"), "{err}");
        let (code, _, _) = run_str(&["ghz", "--phase", "2"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_str(&["frobnicate"]);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-theorem"));
    }

    #[test]
    fn ghz_phase_flag() {
        let (code, out, _) = run_str(&["ghz", "--phase", "+1", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["expectations"]["XXX"].as_f64().unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(v["state"]["phase"], 1);
    }

    #[test]
    fn failing_conditions_exit_3() {
        // An absurdly tight identity tolerance makes pointwise checks fail.
        let (code, out, _) = run_str(&[
            "verify-theorem", "--dim", "3", "--states", "20", "--families", "10", "--seed", "1",
            "--identity-tol", "1e-300",
        ]);
        assert_eq!(code, EXIT_CONDITION_FAILED);
        assert!(out.contains("FAIL"));
    }
}
