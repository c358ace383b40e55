//! `cf`: continued-fraction pencils, poles and partial fractions, `r(A) v`
//! solves and the convergence benchmarks from the command line.
//!
//! Exit codes: 0 success, 2 configuration error, 3 analysis infeasible
//! (multiple poles, irregular pencil), 4 non-convergence.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cf", version, about = "Rational matrix functions through continued-fraction matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the continued fraction and its pencil.
    Inspect(InspectArgs),
    /// Print the finite poles of the pencil.
    Poles(TableArgs),
    /// Print the partial fraction expansion of the pencil.
    Pfe(TableArgs),
    /// Compute r(A) v through the CF-matrix and/or partial fractions.
    Solve(SolveArgs),
    /// Run a convergence benchmark and write one CSV per method.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FnKind {
    /// exp(-z)
    Exp,
    /// z^(-1/2)
    Invsqrt,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Plain,
    Contracted,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Precond {
    None,
    Ilu0,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Cf,
    Pfe,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BenchName {
    Exp,
    Invsqrt,
    InvsqrtError,
}

#[derive(Args, Debug, Clone)]
struct FnArgs {
    /// Function to approximate.
    #[arg(long = "fn", value_enum, default_value = "exp")]
    function: FnKind,
    /// Degree n of the approximation.
    #[arg(long, default_value_t = 20)]
    n: usize,
    /// Pencil form; the contracted form uses 2n levels in an (n+1)-dimensional pencil.
    #[arg(long, value_enum, default_value = "contracted")]
    form: Form,
    /// Continued fraction file (text format) used instead of --fn.
    #[arg(long)]
    cf: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct InspectArgs {
    #[command(flatten)]
    function: FnArgs,
    /// Directory for cf.txt and pencil.txt.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct TableArgs {
    #[command(flatten)]
    function: FnArgs,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SolverArgs {
    /// laplace2d:k, mmatrix:m:density:seed or file:path (Matrix Market).
    #[arg(long, default_value = "laplace2d:100")]
    matrix: String,
    /// Relative residual tolerance.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 500)]
    maxit: usize,
    /// Seed of the random vector v.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Solve the shifted systems concurrently.
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SolveArgs {
    #[command(flatten)]
    function: FnArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Preconditioner of the CF-matrix.
    #[arg(long, value_enum, default_value = "ilu0")]
    precond: Precond,
    /// Preconditioner of the shifted systems.
    #[arg(long, value_enum, default_value = "none")]
    pfe_precond: Precond,
    #[arg(long, value_enum, default_value = "both")]
    route: Route,
    /// Vector file (one value per line) used instead of the seeded random v.
    #[arg(long)]
    v: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct BenchArgs {
    #[arg(value_enum)]
    bench: BenchName,
    /// Degree n of the approximation.
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[command(flatten)]
    solver: SolverArgs,
    /// Diagonal shift added to A in the error benchmark.
    #[arg(long, default_value_t = 0.01)]
    shift: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Inspect(a) => commands::inspect(&a),
        Command::Poles(a) => commands::poles(&a),
        Command::Pfe(a) => commands::pfe(&a),
        Command::Solve(a) => commands::solve(&a),
        Command::Bench(a) => commands::bench(&a),
    };
    match result {
        Ok(code) => code.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code().into()
        }
    }
}
