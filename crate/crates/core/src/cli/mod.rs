//! Command-line front end: `coxeter`, `classify`, `verify` and `tables`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error. Domain errors print one `error=<tag> reason=<text>` line
//! on stderr.

mod tables;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::classify_algebra;
use crate::coxeter::CoxeterData;
use crate::error::Error;
use crate::quiver::{build_star, AlgebraSpec, Quiver};

pub use tables::write_tables;
pub use verify::{run_suite, Suite, SuiteReport};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;

const INPUT_HELP: &str = "\
Inputs (exactly one):
  --tree a,b,c        star T(a,b,c): a, b, c count the vertices on each branch,
                      the centre is extra, so T(a,b,c) has a+b+c+1 vertices.
                      Any number of branches is accepted.
  --canonical p1,...  canonical algebra C(p1,...,pt): each weight p_i is the
                      number of vertices on branch i plus one, so T(a,b,c)
                      corresponds to the weights a+1,b+1,c+1.
  --linear n          linear quiver 1 -> 2 -> ... -> n.
  --quiver FILE       JSON {\"n\": N, \"arrows\": [[s,t], ...]}, 1-based vertices,
                      repeated pairs are parallel arrows.";

#[derive(Debug, Parser)]
#[command(
    name = "coxpoly",
    version,
    about = "Exact Coxeter polynomials of path algebras and canonical algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Coxeter polynomial (ascending coefficients) of an algebra.
    #[command(after_help = INPUT_HELP)]
    Coxeter {
        #[command(flatten)]
        input: Input,
        /// Also print the Cartan matrix.
        #[arg(long)]
        cartan: bool,
        /// Also print the Coxeter matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Classify an algebra by the trace and leading coefficients of its
    /// Coxeter polynomial.
    #[command(after_help = INPUT_HELP)]
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Run an invariant suite over all small instances.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest number of vertices considered.
        #[arg(long, default_value_t = 10)]
        max_size: usize,
    },
    /// Emit Coxeter polynomials of trees and three-branch canonical
    /// algebras as CSV.
    Tables {
        /// Largest number of vertices considered.
        #[arg(long, default_value_t = 10)]
        max_size: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// JSON quiver file.
    #[arg(long, value_name = "FILE")]
    quiver: Option<PathBuf>,
    /// Star with the given branch vertex counts.
    #[arg(long, value_delimiter = ',', value_name = "a,b,c")]
    tree: Option<Vec<usize>>,
    /// Linear quiver on n vertices.
    #[arg(long, value_name = "n")]
    linear: Option<usize>,
    /// Canonical algebra with the given weights.
    #[arg(long, value_delimiter = ',', value_name = "p1,p2,...")]
    canonical: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    ClosedForms,
    Ope,
    Traces,
    Waring,
    Separation,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::ClosedForms => Suite::ClosedForms,
            SuiteArg::Ope => Suite::Ope,
            SuiteArg::Traces => Suite::Traces,
            SuiteArg::Waring => Suite::Waring,
            SuiteArg::Separation => Suite::Separation,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parse `args` (program name first) and run, writing to the process's
/// stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error={} reason={}", e.code(), e);
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Coxeter {
            input,
            cartan,
            matrix,
        } => {
            let (spec, _) = resolve(&input)?;
            let data = CoxeterData::new(spec.cartan()?)?;
            if cartan {
                write!(out, "cartan:\n{}", data.cartan)?;
            }
            if matrix {
                write!(out, "coxeter:\n{}", data.coxeter)?;
            }
            writeln!(out, "poly: {}", data.chi.to_wire())?;
            Ok(EXIT_OK)
        }
        Command::Classify { input } => {
            let (spec, weights) = resolve(&input)?;
            let c = classify_algebra(&spec, weights.as_deref())?;
            writeln!(out, "{c}")?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_size } => {
            let report = run_suite(suite.into(), max_size)?;
            write!(out, "{report}")?;
            Ok(if report.failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
        Command::Tables { max_size } => {
            write_tables(out, max_size)?;
            Ok(EXIT_OK)
        }
    }
}

/// Turn the input flags into an algebra, keeping canonical weights so the
/// classification can report the weight type.
fn resolve(input: &Input) -> Result<(AlgebraSpec, Option<Vec<u64>>), Failure> {
    if let Some(path) = &input.quiver {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let q = Quiver::from_json(&text).map_err(|e| {
            Failure::Usage(format!("malformed quiver JSON in {}: {e}", path.display()))
        })?;
        q.validate()?;
        return Ok((AlgebraSpec::PathAlgebra(q), None));
    }
    if let Some(lengths) = &input.tree {
        return Ok((AlgebraSpec::PathAlgebra(build_star(lengths)?), None));
    }
    if let Some(n) = input.linear {
        if n == 0 {
            return Err(Error::EmptyInput("linear quiver needs at least one vertex").into());
        }
        return Ok((AlgebraSpec::PathAlgebra(Quiver::linear(n)), None));
    }
    if let Some(weights) = &input.canonical {
        return Ok((AlgebraSpec::canonical(weights)?, Some(weights.clone())));
    }
    unreachable!("clap enforces exactly one input flag")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("coxpoly").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn linear_two() {
        assert_eq!(
            call(&["coxeter", "--linear", "2"]),
            (0, "poly: [1, 1, 1]\n".into(), String::new())
        );
    }

    #[test]
    fn classify_examples() {
        let (code, out, _) = call(&["classify", "--canonical", "2,3,6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "canonical t=3 (condition i), tubular, delta=0\n");
        let (_, out, _) = call(&["classify", "--tree", "1,1,1"]);
        assert_eq!(out, "tree type (tr = -1, conditions i-iii fail)\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["coxeter"]).0, 2);
        assert_eq!(call(&["coxeter", "--linear", "2", "--tree", "1,1,1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        let (code, _, err) = call(&["classify", "--canonical", "1,3"]);
        assert_eq!(code, 3);
        assert!(err.starts_with("error=invalid-weights "), "{err}");
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn matrices_printed_on_request() {
        let (_, out, _) = call(&["coxeter", "--linear", "2", "--cartan", "--matrix"]);
        assert!(out.starts_with("cartan:\n"));
        assert!(out.contains("coxeter:\n"));
        assert!(out.ends_with("poly: [1, 1, 1]\n"));
    }
}
