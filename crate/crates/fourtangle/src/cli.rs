//! Command-line surface: state ingestion and the six report commands.
//!
//! Exit status: `0` when the command succeeds (and, for `verify`, every
//! check passes), `1` when checks fail, `2` on malformed input or other
//! errors (diagnostics go to standard error).

use crate::canonical::{canonical_report, canonical_report_exact, CanonicalReport};
use crate::error::{Error, Result};
use crate::hyperdet::{hyperdeterminant_report, three_qubit_report, HyperdetReport, ROUTE_RTOL};
use crate::invariants::{full_invariant_set, IDENTITY_RTOL};
use crate::io::{read_state_file_exact, read_state_file_float, to_pretty_string, StateData};
use crate::scalar::Scalar;
use crate::suite::{
    identity_suite_exact, identity_suite_float, permutation_suite, slocc_suite_exact,
    slocc_suite_float, SuiteReport, SuiteTolerances,
};
use crate::tetrahedron::{tetrahedron_report, TETRAHEDRON_RTOL};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

/// Default seed for the verification suites.
pub const DEFAULT_SEED: u64 = 20260814;

/// Default trial count for the verification suites.
pub const DEFAULT_TRIALS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Double-precision complex arithmetic.
    Float,
    /// Exact Gaussian-rational arithmetic.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable table.
    Table,
    /// Deterministic JSON (sorted keys, 17-significant-digit floats).
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "fourtangle",
    version,
    about = "Geometric SLOCC invariants and hyperdeterminants of four-qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Number of random trials for `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,

    /// Override the command's default tolerance (must be positive).
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,

    /// Arithmetic mode.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// All fifteen invariant quantities of a four-qubit state file.
    Invariants { state_file: PathBuf },
    /// The three hyperdeterminant routes and their consensus.
    Hyperdet { state_file: PathBuf },
    /// Canonical-parameter recovery from the invariants.
    Canonical { state_file: PathBuf },
    /// Tetrahedron diagnostics: ranks, vanishing lines/planes, incidence.
    Tetrahedron { state_file: PathBuf },
    /// Line-versus-quadric class of a three-qubit state file.
    Classify3 { state_file: PathBuf },
    /// Seeded identity, SLOCC-invariance, and permutation suites.
    Verify,
}

fn validated_tolerance(cli: &Cli, default: f64) -> Result<f64> {
    match cli.tolerance {
        None => Ok(default),
        Some(t) if t > 0.0 => Ok(t),
        Some(t) => Err(Error::InvalidStateFile(format!(
            "tolerance must be positive, got {t}"
        ))),
    }
}

fn four_qubit_float(path: &PathBuf) -> Result<crate::state::FourQubitState<num_complex::Complex64>> {
    match read_state_file_float(path)? {
        StateData::Four(state) => Ok(state),
        StateData::Three(_) => Err(Error::InvalidStateFile(
            "this command needs a four-qubit state file (n = 4)".into(),
        )),
    }
}

fn four_qubit_exact(
    path: &PathBuf,
) -> Result<crate::state::FourQubitState<crate::scalar::GaussianRational>> {
    match read_state_file_exact(path)? {
        StateData::Four(state) => Ok(state),
        StateData::Three(_) => Err(Error::InvalidStateFile(
            "this command needs a four-qubit state file (n = 4)".into(),
        )),
    }
}

fn print_invariants<T: Scalar>(
    inv: &crate::invariants::InvariantSet<T>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> Result<()> {
    match output {
        OutputFormat::Json => writeln!(out, "{}", to_pretty_string(&inv.to_json()))?,
        OutputFormat::Table => {
            for (name, value) in inv.fields() {
                writeln!(out, "{name:>5} = {value}")?;
            }
        }
    }
    Ok(())
}

fn print_hyperdet<T: Scalar>(
    report: &HyperdetReport<T>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> Result<()> {
    match output {
        OutputFormat::Json => writeln!(out, "{}", to_pretty_string(&report.to_json()))?,
        OutputFormat::Table => {
            writeln!(out, "D4 (S^3 - 27 T^2)      = {}", report.d4_st)?;
            writeln!(out, "D4 (quartic disc/256)  = {}", report.d4_quartic)?;
            writeln!(out, "D4 (pencil disc/256)   = {}", report.d4_schlaefli)?;
            writeln!(out, "max relative spread    = {:.3e}", report.max_relative_spread)?;
            match &report.consensus {
                Some(value) => writeln!(out, "consensus              = {value}")?,
                None => writeln!(out, "consensus              = (routes disagree)")?,
            }
            writeln!(out, "S = {}", report.s)?;
            writeln!(out, "T = {}", report.t)?;
            writeln!(out, "U = {}", report.u)?;
            writeln!(out, "V = {}", report.v)?;
        }
    }
    Ok(())
}

fn print_canonical<T: Scalar>(
    report: &CanonicalReport<T>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> Result<()> {
    match output {
        OutputFormat::Json => writeln!(out, "{}", to_pretty_string(&report.to_json()))?,
        OutputFormat::Table => {
            writeln!(
                out,
                "resolvent quartic coefficients (w^0 .. w^4):"
            )?;
            for (k, c) in report.resolvent.c.iter().enumerate() {
                writeln!(out, "  c[{k}] = {c}")?;
            }
            match &report.outcome {
                crate::canonical::RecoveryOutcome::Candidates { roots, candidates } => {
                    writeln!(out, "squared parameters (quartic roots):")?;
                    for r in roots {
                        writeln!(out, "  {r}")?;
                    }
                    writeln!(out, "verified parameter candidates:")?;
                    for (i, cand) in candidates.iter().enumerate() {
                        let joined = cand
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(", ");
                        writeln!(out, "  #{i}: ({joined})")?;
                    }
                }
                crate::canonical::RecoveryOutcome::Degenerate { pattern, clusters } => {
                    let pat = pattern
                        .iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(out, "degenerate resolvent: multiplicity pattern ({pat})")?;
                    for (root, mult) in clusters {
                        writeln!(out, "  root {root} with multiplicity {mult}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn print_tetrahedron<T: Scalar>(
    report: &crate::tetrahedron::TetrahedronReport<T>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> Result<()> {
    match output {
        OutputFormat::Json => writeln!(out, "{}", to_pretty_string(&report.to_json()))?,
        OutputFormat::Table => {
            writeln!(out, "point rank = {}", report.point_rank)?;
            writeln!(out, "I4         = {}", report.i4)?;
            writeln!(out, "degenerate = {}", report.degenerate)?;
            let lines = if report.vanishing_lines.is_empty() {
                "(none)".to_string()
            } else {
                report
                    .vanishing_lines
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(out, "vanishing lines  = {lines}")?;
            let planes = if report.vanishing_planes.is_empty() {
                "(none)".to_string()
            } else {
                report
                    .vanishing_planes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(out, "vanishing planes = {planes}")?;
            let labels = crate::geometry::LineLabel::ALL;
            write!(out, "incidence:   ")?;
            for l in labels {
                write!(out, "{l:>3}")?;
            }
            writeln!(out)?;
            for (i, l) in labels.iter().enumerate() {
                write!(out, "         {l:>3} ")?;
                for j in 0..6 {
                    write!(out, "{:>3}", if report.incidence[i][j] { "x" } else { "." })?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn print_suites(
    suites: &[SuiteReport],
    output: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool> {
    let passed = suites.iter().all(|s| s.passed);
    match output {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "passed": passed,
                "suites": suites.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", to_pretty_string(&value))?;
        }
        OutputFormat::Table => {
            for suite in suites {
                writeln!(out, "== {} ({} trials) ==", suite.label, suite.trials)?;
                for c in &suite.checks {
                    writeln!(
                        out,
                        "[{}] {:<58} worst {:.3e}{}",
                        if c.failures == 0 { "PASS" } else { "FAIL" },
                        c.name,
                        c.max_residual,
                        if c.failures == 0 {
                            String::new()
                        } else {
                            format!("  ({} failing trials)", c.failures)
                        },
                    )?;
                }
            }
            writeln!(out, "overall: {}", if passed { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(passed)
}

/// Executes a parsed command, writing the report to `out`. Returns
/// `Ok(true)` when everything passed, `Ok(false)` when checks failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    if cli.trials == 0 {
        return Err(Error::InvalidStateFile("trials must be at least 1".into()));
    }
    match &cli.command {
        Command::Invariants { state_file } => {
            match cli.mode {
                Mode::Float => {
                    let inv = full_invariant_set(&four_qubit_float(state_file)?)?;
                    print_invariants(&inv, cli.output, out)?;
                }
                Mode::Exact => {
                    let inv = full_invariant_set(&four_qubit_exact(state_file)?)?;
                    print_invariants(&inv, cli.output, out)?;
                }
            }
            Ok(true)
        }
        Command::Hyperdet { state_file } => {
            let tol = validated_tolerance(cli, ROUTE_RTOL)?;
            match cli.mode {
                Mode::Float => {
                    let report = hyperdeterminant_report(&four_qubit_float(state_file)?, tol)?;
                    print_hyperdet(&report, cli.output, out)?;
                }
                Mode::Exact => {
                    let report = hyperdeterminant_report(&four_qubit_exact(state_file)?, tol)?;
                    print_hyperdet(&report, cli.output, out)?;
                }
            }
            Ok(true)
        }
        Command::Canonical { state_file } => {
            let tol = validated_tolerance(cli, 1e-8)?;
            match cli.mode {
                Mode::Float => {
                    let report = canonical_report(&four_qubit_float(state_file)?, tol)?;
                    print_canonical(&report, cli.output, out)?;
                }
                Mode::Exact => {
                    let report = canonical_report_exact(&four_qubit_exact(state_file)?)?;
                    print_canonical(&report, cli.output, out)?;
                }
            }
            Ok(true)
        }
        Command::Tetrahedron { state_file } => {
            let tol = validated_tolerance(cli, TETRAHEDRON_RTOL)?;
            match cli.mode {
                Mode::Float => {
                    let report = tetrahedron_report(&four_qubit_float(state_file)?, tol);
                    print_tetrahedron(&report, cli.output, out)?;
                }
                Mode::Exact => {
                    let report = tetrahedron_report(&four_qubit_exact(state_file)?, tol);
                    print_tetrahedron(&report, cli.output, out)?;
                }
            }
            Ok(true)
        }
        Command::Classify3 { state_file } => {
            let tol = validated_tolerance(cli, IDENTITY_RTOL)?;
            let (class_json, class_line) = match cli.mode {
                Mode::Float => match read_state_file_float(state_file)? {
                    StateData::Three(state) => {
                        let report = three_qubit_report(&state, tol);
                        (report.to_json(), report.class.to_string())
                    }
                    StateData::Four(_) => {
                        return Err(Error::InvalidStateFile(
                            "classify3 needs a three-qubit state file (n = 3)".into(),
                        ))
                    }
                },
                Mode::Exact => match read_state_file_exact(state_file)? {
                    StateData::Three(state) => {
                        let report = three_qubit_report(&state, tol);
                        (report.to_json(), report.class.to_string())
                    }
                    StateData::Four(_) => {
                        return Err(Error::InvalidStateFile(
                            "classify3 needs a three-qubit state file (n = 3)".into(),
                        ))
                    }
                },
            };
            match cli.output {
                OutputFormat::Json => writeln!(out, "{}", to_pretty_string(&class_json))?,
                OutputFormat::Table => writeln!(out, "{class_line}")?,
            }
            Ok(true)
        }
        Command::Verify => {
            let tols = match validated_tolerance(cli, IDENTITY_RTOL)? {
                t if cli.tolerance.is_some() => SuiteTolerances::from_core(t),
                _ => SuiteTolerances::default(),
            };
            let suites = match cli.mode {
                Mode::Float => vec![
                    identity_suite_float(cli.seed, cli.trials, &tols),
                    slocc_suite_float(cli.seed.wrapping_add(1), cli.trials, 1e-8),
                    permutation_suite(cli.seed.wrapping_add(2), cli.trials, 1e-12),
                ],
                Mode::Exact => vec![
                    identity_suite_exact(cli.seed, cli.trials),
                    slocc_suite_exact(cli.seed.wrapping_add(1), cli.trials),
                ],
            };
            print_suites(&suites, cli.output, out)
        }
    }
}

/// Parses process arguments, runs, and maps the outcome onto the exit
/// status.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::g_state;
    use crate::io::four_qubit_json;
    use num_complex::Complex64;

    fn write_g1234(dir: &std::path::Path) -> PathBuf {
        let params = [
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(4.0, 0.0),
        ];
        let path = dir.join("g1234.json");
        std::fs::write(&path, to_pretty_string(&four_qubit_json(&g_state(&params)))).unwrap();
        path
    }

    fn run(args: &[&str]) -> (Result<bool>, String) {
        let cli = Cli::parse_from(args);
        let mut buf = Vec::new();
        let result = execute(&cli, &mut buf);
        (result, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn invariants_on_the_reference_state() {
        let dir = std::env::temp_dir().join("fourtangle-cli-test-inv");
        std::fs::create_dir_all(&dir).unwrap();
        let path = write_g1234(&dir);
        let (result, output) = run(&[
            "fourtangle",
            "invariants",
            path.to_str().unwrap(),
            "--output",
            "json",
        ]);
        assert!(result.unwrap());
        let parsed: serde_json::Value = serde_json::from_str(&output).unwrap();
        assert_eq!(parsed["I4"][0].as_f64().unwrap(), 24.0);
        assert_eq!(parsed["I1"][0].as_f64().unwrap(), 7.5);
    }

    #[test]
    fn verify_passes_and_rejects_bad_flags() {
        let (result, output) = run(&[
            "fourtangle",
            "verify",
            "--trials",
            "5",
            "--seed",
            "7",
        ]);
        assert!(result.unwrap(), "{output}");
        assert!(output.contains("overall: PASS"));

        let (result, _) = run(&["fourtangle", "verify", "--trials", "0"]);
        assert!(result.is_err());
        let (result, _) = run(&["fourtangle", "verify", "--tolerance=-1", "--trials", "2"]);
        assert!(result.is_err());
    }

    #[test]
    fn classify3_reports_the_ghz_class() {
        let dir = std::env::temp_dir().join("fourtangle-cli-test-ghz");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ghz3.json");
        std::fs::write(
            &path,
            r#"{"n": 3, "amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]}"#,
        )
        .unwrap();
        let (result, output) = run(&["fourtangle", "classify3", path.to_str().unwrap()]);
        assert!(result.unwrap());
        assert_eq!(output.trim(), "TwoPoints");
    }

    #[test]
    fn wrong_arity_is_a_clean_error() {
        let dir = std::env::temp_dir().join("fourtangle-cli-test-arity");
        std::fs::create_dir_all(&dir).unwrap();
        let path = write_g1234(&dir);
        let (result, _) = run(&["fourtangle", "classify3", path.to_str().unwrap()]);
        assert!(matches!(result, Err(Error::InvalidStateFile(_))));
    }
}
