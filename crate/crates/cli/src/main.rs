//! `geomr`: JSON front end to the `geomr` library.

mod compute;
mod verify;
mod wire;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use geomr::sampling::DEFAULT_SEED;
use geomr::GeomError;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "geomr", version, about = "Geometric and combinatorial R-matrices in affine type A")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one operation on a JSON input.
    Compute {
        #[arg(value_enum)]
        op: compute::Command,
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run a seeded verification suite and print a report.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, env = "GEOMR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Comma-separated k values, e.g. `1,2,1`.
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
    },
}

fn emit<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable output"));
}

fn fail(e: &GeomError) -> ExitCode {
    eprintln!("geomr: {e}");
    emit(&json!({ "error": verify::error_code(e), "detail": e.detail() }));
    match e {
        GeomError::InvalidInput(_) => ExitCode::from(1),
        GeomError::DegenerateInput(_) => ExitCode::from(2),
    }
}

fn read_input(path: Option<PathBuf>) -> Result<Value, GeomError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(&p).map_err(|e| GeomError::invalid(format!("{}: {e}", p.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| GeomError::invalid(format!("stdin: {e}")))?;
        }
    }
    serde_json::from_str(&text).map_err(|e| GeomError::invalid(format!("malformed JSON: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Cmd::Compute { op, input } => read_input(input).and_then(|v| compute::run(op, v)).map(|out| emit(&out)),
        Cmd::Verify { suite, n, seed, trials, profile } => verify::Config::new(suite, n, seed, trials, profile)
            .and_then(|cfg| verify::run(suite, &cfg))
            .map(|report| {
                if !report.passed {
                    eprintln!("geomr: some checks failed");
                }
                emit(&report)
            }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
