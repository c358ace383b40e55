//! Command implementations and the mapping of library errors to exit codes.

use std::fmt::Write as _;
use std::path::Path;

use cfmatrix::confrac::{from_text, to_text, ContinuedFraction};
use cfmatrix::linalg::{read_vector, write_vector, LinalgError};
use cfmatrix::matfun::{
    cf_apply, pfe_apply, run_bench, seeded_vector, BenchKind, BenchParams, FunctionKind, FunctionSpec, MatfunError,
    MatrixSource, PencilForm, PrecondChoice, SolverConfig,
};
use cfmatrix::pencil::{format_pencil, PencilError};
use cfmatrix::solvers::history_csv;
use cfmatrix::Complex64;

use crate::{BenchArgs, BenchName, FnArgs, FnKind, Form, InspectArgs, Precond, Route, SolveArgs, SolverArgs, TableArgs};

/// Exit status of a completed command: 0, or 4 when a solve did not converge.
pub type Outcome = Result<u8, CliError>;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags, unreadable or malformed input files.
    Config(String),
    /// The requested analysis does not exist for this input.
    Infeasible(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) => 2,
            Self::Infeasible(_) => 3,
            Self::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Config(m) | Self::Infeasible(m) | Self::Failure(m) => f.write_str(m),
        }
    }
}

impl From<MatfunError> for CliError {
    fn from(e: MatfunError) -> Self {
        let msg = e.to_string();
        match e {
            MatfunError::InvalidSpec(_)
            | MatfunError::DimensionMismatch { .. }
            | MatfunError::Io(_)
            | MatfunError::Cf(_)
            | MatfunError::Linalg(LinalgError::Io(_) | LinalgError::Parse { .. } | LinalgError::InvalidStructure(_)) => {
                Self::Config(msg)
            }
            MatfunError::Pencil(PencilError::Parse { .. }) => Self::Config(msg),
            MatfunError::Pencil(_) | MatfunError::Solver(_) => Self::Infeasible(msg),
            MatfunError::Linalg(_) => Self::Failure(msg),
        }
    }
}

impl From<PencilError> for CliError {
    fn from(e: PencilError) -> Self {
        MatfunError::from(e).into()
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        MatfunError::from(e).into()
    }
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| config(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| config(format!("{}: {e}", path.display())))
}

fn function_spec(a: &FnArgs) -> Result<FunctionSpec, CliError> {
    let form = match a.form {
        Form::Plain => PencilForm::Plain,
        Form::Contracted => PencilForm::Contracted,
    };
    if let Some(path) = &a.cf {
        let text = std::fs::read_to_string(path).map_err(|e| config(format!("--cf {}: {e}", path.display())))?;
        let cf: ContinuedFraction<f64> = from_text(&text).map_err(|e| config(format!("--cf {}: {e}", path.display())))?;
        let degree = match form {
            PencilForm::Plain => cf.len(),
            PencilForm::Contracted => cf.len() / 2,
        };
        if degree == 0 {
            return Err(config(format!("--cf {}: too few levels for the {:?} form", path.display(), a.form)));
        }
        return Ok(FunctionSpec { kind: FunctionKind::CustomCf(cf), degree, form, variable_shift: 0.0 });
    }
    if a.n == 0 {
        return Err(config("--n must be at least 1"));
    }
    let spec = match a.function {
        FnKind::Exp => FunctionSpec::exp_neg(a.n),
        FnKind::Invsqrt => FunctionSpec::inv_sqrt(a.n),
    };
    Ok(spec.with_form(form))
}

fn describe(spec: &FunctionSpec) -> String {
    let what = match spec.kind {
        FunctionKind::ExpNeg => "exp(-z)",
        FunctionKind::InvSqrt => "z^(-1/2)",
        FunctionKind::CustomCf(_) => "1/g(z) of a given continued fraction",
    };
    let form = match spec.form {
        PencilForm::Plain => "plain",
        PencilForm::Contracted => "contracted",
    };
    let mut s = format!("# {what}, degree {}, {form} pencil", spec.degree);
    if spec.variable_shift != 0.0 {
        let _ = write!(s, ", variable shifted by {}", spec.variable_shift);
    }
    s
}

pub fn inspect(a: &InspectArgs) -> Outcome {
    let spec = function_spec(&a.function)?;
    let cf = spec.cfraction()?;
    let pencil = spec.pencil()?;
    let mut out = describe(&spec);
    out.push('\n');
    if let Ok((b0, c)) = cf.as_c_fraction() {
        let _ = writeln!(out, "b_0 = {b0}");
        for (i, ci) in c.iter().enumerate() {
            let _ = writeln!(out, "c_{} = {ci}", i + 1);
        }
    }
    let (cf_text, pencil_text) = (to_text(&cf), format_pencil(&pencil));
    let _ = write!(out, "\n# continued fraction\n{cf_text}\n# pencil T(z) = T0 - z T1\n{pencil_text}");
    print!("{out}");
    if let Some(dir) = &a.out {
        write_file(&dir.join("cf.txt"), &cf_text)?;
        write_file(&dir.join("pencil.txt"), &pencil_text)?;
    }
    Ok(0)
}

pub fn poles(a: &TableArgs) -> Outcome {
    let spec = function_spec(&a.function)?;
    let poles = spec.pencil()?.poles()?;
    println!("{}", describe(&spec));
    println!("# {} finite poles, {} infinite eigenvalues", poles.finite.len(), poles.infinite);
    let mut csv = String::from("j,tau_re,tau_im\n");
    for (j, t) in poles.finite.iter().map(|&t| tidy(t)).enumerate() {
        println!("{j:>3}  {:>23.15e}  {:>23.15e}", t.re, t.im);
        let _ = writeln!(csv, "{j},{:.15e},{:.15e}", t.re, t.im);
    }
    if let Some(path) = &a.csv {
        write_file(path, &csv)?;
    }
    Ok(0)
}

pub fn pfe(a: &TableArgs) -> Outcome {
    let spec = function_spec(&a.function)?;
    let pfe = spec.pencil()?.pfe()?;
    println!("{}", describe(&spec));
    println!("# (T(z)^-1)_11 = sum_j omega_j / (tau_j - z) + sigma");
    println!("{:>3}  {:>23}  {:>23}  {:>23}  {:>23}", "j", "tau_re", "tau_im", "omega_re", "omega_im");
    let mut csv = String::from("j,tau_re,tau_im,omega_re,omega_im\n");
    for (j, (t, w)) in pfe.poles.iter().zip(&pfe.weights).map(|(&t, &w)| (tidy(t), tidy(w))).enumerate() {
        println!("{j:>3}  {:>23.15e}  {:>23.15e}  {:>23.15e}  {:>23.15e}", t.re, t.im, w.re, w.im);
        let _ = writeln!(csv, "{j},{:.15e},{:.15e},{:.15e},{:.15e}", t.re, t.im, w.re, w.im);
    }
    let sigma = tidy(pfe.constant);
    println!("sigma  {:.15e}  {:.15e}", sigma.re, sigma.im);
    let _ = writeln!(csv, "sigma,,,{:.15e},{:.15e}", sigma.re, sigma.im);
    if let Some(path) = &a.csv {
        write_file(path, &csv)?;
    }
    Ok(0)
}

/// Prints `-0` as `0`.
fn tidy(z: Complex64) -> Complex64 {
    Complex64::new(z.re + 0.0, z.im + 0.0)
}

fn check_solver(s: &SolverArgs) -> Result<MatrixSource, CliError> {
    if !(s.tol > 0.0 && s.tol < 1.0) {
        return Err(config(format!("--tol {} outside (0, 1)", s.tol)));
    }
    if s.maxit == 0 {
        return Err(config("--maxit must be at least 1"));
    }
    Ok(s.matrix.parse::<MatrixSource>()?)
}

fn precond(p: Precond) -> PrecondChoice {
    match p {
        Precond::None => PrecondChoice::None,
        Precond::Ilu0 => PrecondChoice::Ilu0,
    }
}

pub fn solve(a: &SolveArgs) -> Outcome {
    let spec = function_spec(&a.function)?;
    let source = check_solver(&a.solver)?;
    let mat = source.build()?;
    let v = match &a.v {
        Some(path) => read_vector::<f64>(path)?,
        None => seeded_vector(mat.dim(), a.solver.seed),
    };
    if v.len() != mat.dim() {
        return Err(config(format!("vector has {} entries, matrix dimension is {}", v.len(), mat.dim())));
    }
    let cfg = SolverConfig {
        tol: a.solver.tol,
        maxit: a.solver.maxit,
        precond: precond(a.precond),
        pfe_precond: precond(a.pfe_precond),
        parallel_shifts: a.solver.parallel,
    };
    println!("{}", describe(&spec));
    println!("# matrix {source}, dimension {}, nnz {}", mat.dim(), mat.nnz());
    let mut converged = true;
    let mut ys = Vec::new();
    if matches!(a.route, Route::Cf | Route::Both) {
        let r = cf_apply(&spec, &mat, &v, &cfg)?;
        println!(
            "cf ({}): iterations {}, final relres {:.3e}, converged {}, arithmetic real",
            if cfg.precond == PrecondChoice::Ilu0 { "ilu0" } else { "none" },
            r.report.iterations,
            r.report.final_residual(),
            r.report.converged
        );
        converged &= r.report.converged;
        if let Some(dir) = &a.solver.out {
            write_vector(&dir_file(dir, "y_cf.txt")?, &r.y)?;
            write_file(&dir.join("solve_cf.csv"), &r.report.to_csv())?;
        }
        ys.push(r.y);
    }
    if matches!(a.route, Route::Pfe | Route::Both) {
        let r = pfe_apply(&spec, &mat, &v, &cfg)?;
        println!(
            "pfe ({} poles): max iterations {}, final max relres {:.3e}, converged {}, arithmetic {}, discarded imaginary part {:.1e}",
            r.pfe.len(),
            r.report.max_iterations(),
            r.report.max_history.last().copied().unwrap_or(0.0),
            r.report.converged,
            if r.pfe.is_real() { "real" } else { "complex" },
            r.discarded_imag
        );
        converged &= r.report.converged;
        if let Some(dir) = &a.solver.out {
            write_vector(&dir_file(dir, "y_pfe.txt")?, &r.y)?;
            write_file(&dir.join("solve_pfe.csv"), &history_csv("relres", &r.report.max_history))?;
        }
        ys.push(r.y);
    }
    if let [y1, y2] = ys.as_slice() {
        let diff: f64 = y1.iter().zip(y2).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt();
        let norm: f64 = y1.iter().map(|p| p * p).sum::<f64>().sqrt();
        println!("relative difference of the routes: {:.3e}", diff / norm);
    }
    if !converged {
        eprintln!("warning: not converged within --maxit {}", a.solver.maxit);
        return Ok(4);
    }
    Ok(0)
}

fn dir_file(dir: &Path, name: &str) -> Result<std::path::PathBuf, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| config(format!("{}: {e}", dir.display())))?;
    Ok(dir.join(name))
}

pub fn bench(a: &BenchArgs) -> Outcome {
    if a.n == 0 {
        return Err(config("--n must be at least 1"));
    }
    let source = check_solver(&a.solver)?;
    let kind = match a.bench {
        BenchName::Exp => BenchKind::Exp,
        BenchName::Invsqrt => BenchKind::InvSqrt,
        BenchName::InvsqrtError => BenchKind::InvSqrtError,
    };
    let params = BenchParams {
        degree: a.n,
        tol: a.solver.tol,
        maxit: a.solver.maxit,
        seed: a.solver.seed,
        shift: a.shift,
        parallel_shifts: a.solver.parallel,
        out: a.solver.out.clone(),
        ..BenchParams::new(kind, source)
    };
    let res = run_bench(&params)?;
    print!("{}", res.manifest());
    if let Some(dir) = &params.out {
        println!("# written to {}", dir.display());
    }
    Ok(if res.all_converged() { 0 } else { 4 })
}
