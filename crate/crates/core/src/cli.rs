//! The `su3mat` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.
//! Data goes to stdout (or `--output`), diagnostics to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Su3Error;
use crate::generators::{build_generator_set, gell_mann_index, GeneratorName};
use crate::oracle::{oracle_solve, ORACLE_MAX_DIMENSION};
use crate::structure::{dimension, weight_multiplicities};
use crate::unknowns::upc2_map;
use crate::verify::{compare_with_oracle, sweep, verify_irrep};
use crate::wire;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "su3mat", version, about = "Exact basis matrices for SU(3) (p,q) irreps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct Irrep {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    q: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit one matrix: Tp, Tm, T3, Up, Um, U3, Vp, Vm or F1..F8.
    Generate {
        #[command(flatten)]
        irrep: Irrep,
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Add a floating-point approximation next to every exact value.
        #[arg(long)]
        approx: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check commutators, Casimir and structure for one irrep.
    Verify {
        #[command(flatten)]
        irrep: Irrep,
        /// Also compare the block unknowns with the brute-force solver.
        #[arg(long)]
        oracle: bool,
    },
    /// Verify every irrep with p >= q and dimension below the bound.
    Sweep {
        #[arg(long = "max-d", value_parser = clap::value_parser!(u64).range(1..))]
        max_d: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long)]
        oracle: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Weight multiplicities as `two_t3,three_y,count`.
    Weights {
        #[command(flatten)]
        irrep: Irrep,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Squared block unknowns as `i,j,num,den` (requires p >= q).
    Unknowns {
        #[command(flatten)]
        irrep: Irrep,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Squared block unknowns solved from the commutators alone, checked
    /// against the closed forms.
    Oracle {
        #[command(flatten)]
        irrep: Irrep,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// What a subcommand produced: the data, and whether it counts as success.
struct Outcome {
    data: String,
    ok: bool,
    output: Option<PathBuf>,
}

impl Outcome {
    fn ok(data: String, output: Option<PathBuf>) -> Self {
        Self { data, ok: true, output }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Su3Error> for Failure {
    fn from(e: Su3Error) -> Self {
        match e {
            Su3Error::RequiresPGeQ { .. } | Su3Error::UnknownMatrix(_) | Su3Error::OracleTooLarge { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, err) {
        Ok(outcome) => {
            let written = match &outcome.output {
                Some(path) => std::fs::write(path, &outcome.data).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(outcome.data.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILURE;
            }
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(command: Command, err: &mut dyn Write) -> Result<Outcome, Failure> {
    match command {
        Command::Generate { irrep, matrix, format, approx, output } => {
            generate(irrep.p, irrep.q, &matrix, format, approx).map(|data| Outcome::ok(data, output))
        }
        Command::Verify { irrep, oracle } => verify(irrep.p, irrep.q, oracle),
        Command::Sweep { max_d, jobs, oracle, output } => {
            let summary = sweep(max_d, jobs as usize, oracle);
            for row in summary.rows.iter().filter(|r| !r.passed()) {
                let _ = writeln!(
                    err,
                    "{}: failed{}",
                    row.label,
                    row.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
                );
            }
            let _ = writeln!(err, "{}/{} irreps pass", summary.passed(), summary.rows.len());
            Ok(Outcome { data: summary.to_string(), ok: summary.all_passed(), output })
        }
        Command::Weights { irrep, output } => {
            Ok(Outcome::ok(wire::weights_to_csv(&weight_multiplicities(irrep.p, irrep.q)), output))
        }
        Command::Unknowns { irrep, output } => {
            Ok(Outcome::ok(wire::unknowns_to_csv(&upc2_map(irrep.p, irrep.q)?), output))
        }
        Command::Oracle { irrep, output } => {
            let solved = oracle_solve(irrep.p, irrep.q)?;
            let data = wire::unknowns_to_csv(&solved);
            match compare_with_oracle(&upc2_map(irrep.p, irrep.q)?, &solved) {
                Ok(n) => {
                    let _ = writeln!(err, "{n} blocks agree with the closed forms");
                    Ok(Outcome::ok(data, output))
                }
                Err(detail) => {
                    let _ = writeln!(err, "mismatch: {detail}");
                    Ok(Outcome { data, ok: false, output })
                }
            }
        }
    }
}

fn generate(p: u32, q: u32, name: &str, format: Format, approx: bool) -> Result<String, Failure> {
    let gs = build_generator_set(p, q)?;
    let header = wire::MatrixHeader { p, q, d: dimension(p, q) as usize, name: name.to_string() };
    let body = if let Some(i) = gell_mann_index(name) {
        let f = gs.to_gell_mann();
        match format {
            Format::Json => wire::complex_matrix_to_json(&header, f.get(i), approx).to_string() + "\n",
            Format::Csv => wire::complex_matrix_to_csv(f.get(i), approx),
        }
    } else {
        let m = gs.matrix(name.parse::<GeneratorName>()?);
        match format {
            Format::Json => wire::matrix_to_json(&header, m, approx).to_string() + "\n",
            Format::Csv => wire::matrix_to_csv(m, approx),
        }
    };
    Ok(body)
}

fn verify(p: u32, q: u32, with_oracle: bool) -> Result<Outcome, Failure> {
    let d = dimension(p, q);
    if with_oracle && d > ORACLE_MAX_DIMENSION {
        return Err(Failure::Usage(format!("--oracle supports d <= {ORACLE_MAX_DIMENSION}, ({p},{q}) has d = {d}")));
    }
    let report = verify_irrep(p, q, with_oracle)?;
    let mut text = String::new();
    let _ = writeln!(text, "irrep {}, d = {}", report.label, report.label.dimension());
    let commutators = &report.relations[..28];
    let exact = commutators.iter().filter(|r| r.exact_zero).count();
    let _ = writeln!(text, "{exact}/{} commutators exact", commutators.len());
    for r in &report.relations {
        if !r.exact_zero {
            let _ = writeln!(
                text,
                "  FAIL {}: max residual {:e}{}",
                r.name,
                r.float_residual,
                r.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
            );
        }
    }
    for r in &report.relations[28..] {
        let status = if r.exact_zero { "exact" } else { "FAIL" };
        let detail = r.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
        let _ = writeln!(text, "{}: {status}{detail}", r.name);
    }
    let _ = writeln!(text, "{}", if report.passed() { "PASS" } else { "FAIL" });
    Ok(Outcome { data: text, ok: report.passed(), output: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("su3mat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn t3_csv() {
        let (code, out, _) = run_str(&["generate", "--p", "1", "--q", "0", "--matrix", "T3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "row,col,num,den,sf\n2,2,1,2,1\n3,3,-1,2,1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["generate", "--p", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["generate", "--p", "1", "--q", "0", "--matrix", "X"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["unknowns", "--p", "1", "--q", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--p", "5", "--q", "3", "--oracle"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_report() {
        let (code, out, _) = run_str(&["verify", "--p", "1", "--q", "1", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.contains("28/28 commutators exact"), "{out}");
        assert!(out.contains("oracle: exact"), "{out}");
    }
}
