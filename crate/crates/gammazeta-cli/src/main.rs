//! `gammazeta`: evaluate exponentially weighted zeta-type series and the
//! quantum-statistics integrals built on them, sweep parameter tables,
//! and run the identity verification suite.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain error,
//! 3 non-convergence, 4 unexpected verification failure.

mod run;
mod scalar;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use run::{FunctionName, MethodArg, OutputFormat, RawParams};

#[derive(Parser)]
#[command(
    name = "gammazeta",
    version,
    about = "Gamma-zeta special functions: point evaluation, parameter sweeps, identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point; prints value, error estimate, method.
    Eval(EvalArgs),
    /// Sweep one or two real parameters and emit a CSV or JSON table.
    Table(TableArgs),
    /// Run the identity verification suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Function to evaluate.
    #[arg(long, value_enum)]
    function: FunctionName,
    #[command(flatten)]
    params: RawParams,
    /// Force an evaluation route.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Relative tolerance target (default 1e-10; GAMMAZETA_TOL also applies).
    #[arg(long)]
    rel_tol: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Function to evaluate.
    #[arg(long, value_enum)]
    function: FunctionName,
    #[command(flatten)]
    params: RawParams,
    /// Sweep spec (repeat for a second axis; at most two).
    #[arg(long, value_name = "NAME:START:STOP:STEPS")]
    sweep: Vec<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Write the table to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Force an evaluation route.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Relative tolerance target (default 1e-10; GAMMAZETA_TOL also applies).
    #[arg(long)]
    rel_tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON grid file (defaults to the built-in 60-case grid).
    #[arg(long, value_name = "PATH")]
    grid: Option<PathBuf>,
    /// Comma-separated identity names to run, e.g. Theorem1,RouteAgreement.
    #[arg(long, value_name = "IDS")]
    only: Option<String>,
    /// Write the JSON report to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Relative tolerance for the evaluations inside each identity.
    #[arg(long)]
    rel_tol: Option<f64>,
}

fn main() {
    std::process::exit(run_cli());
}

fn run_cli() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            // clap's own printer tolerates a closed pipe.
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                0
            } else {
                let _ = e.print();
                1
            };
        }
    };
    let outcome = match cli.command {
        Command::Eval(a) => run::eval_command(a.function, &a.params, a.method, a.rel_tol),
        Command::Table(a) => run::table_command(
            a.function,
            &a.params,
            &a.sweep,
            a.format,
            a.output.as_deref(),
            a.method,
            a.rel_tol,
        ),
        Command::Verify(a) => {
            run::verify_command(a.grid.as_deref(), a.only.as_deref(), a.output.as_deref(), a.rel_tol)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if f.code == 1 {
                eprintln!("Run `gammazeta --help` for usage.");
            }
            f.code
        }
    }
}
