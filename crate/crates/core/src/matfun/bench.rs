//! Convergence benchmarks: the CF-matrix with and without ILU(0) against the
//! partial fraction route, written as one CSV per method plus a manifest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    cf_apply, invsqrt_error_oracle, pfe_apply, FunctionSpec, MatfunError, OracleRoutes, PrecondChoice, SolverConfig,
};
use crate::linalg::{laplace2d, random_mmatrix, read_matrix_market, SparseCSR, MMATRIX_SHIFT};
use crate::solvers::history_csv;

/// Where the benchmark matrix comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixSource {
    /// 2D five-point Laplacian on a `k × k` grid.
    Laplace2d { k: usize },
    /// Random sparse nonsingular M-matrix of dimension `m`.
    MMatrix { m: usize, density: f64, seed: u64 },
    /// Matrix Market file.
    File(PathBuf),
}

impl FromStr for MatrixSource {
    type Err = MatfunError;

    /// `laplace2d:k`, `mmatrix:m:density:seed` or `file:path`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |what: &str| MatfunError::InvalidSpec(format!("{what} in matrix source '{s}'"));
        let (head, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        match head {
            "laplace2d" => {
                let k: usize = rest.parse().map_err(|_| bad("bad grid size"))?;
                if k == 0 {
                    return Err(bad("zero grid size"));
                }
                Ok(Self::Laplace2d { k })
            }
            "mmatrix" => {
                let parts: Vec<&str> = rest.split(':').collect();
                if parts.len() != 3 {
                    return Err(bad("expected mmatrix:m:density:seed"));
                }
                let m: usize = parts[0].parse().map_err(|_| bad("bad dimension"))?;
                let density: f64 = parts[1].parse().map_err(|_| bad("bad density"))?;
                let seed: u64 = parts[2].parse().map_err(|_| bad("bad seed"))?;
                if m == 0 || !(density > 0.0 && density <= 1.0) {
                    return Err(bad("dimension or density out of range"));
                }
                Ok(Self::MMatrix { m, density, seed })
            }
            "file" if !rest.is_empty() => Ok(Self::File(PathBuf::from(rest))),
            _ => Err(bad("unknown kind")),
        }
    }
}

impl std::fmt::Display for MatrixSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Laplace2d { k } => write!(f, "laplace2d:{k}"),
            Self::MMatrix { m, density, seed } => write!(f, "mmatrix:{m}:{density}:{seed}"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl MatrixSource {
    pub fn build(&self) -> Result<SparseCSR<f64>, MatfunError> {
        Ok(match self {
            Self::Laplace2d { k } => laplace2d(*k),
            Self::MMatrix { m, density, seed } => random_mmatrix(*m, *density, *seed, MMATRIX_SHIFT)?,
            Self::File(p) => read_matrix_market(p)?,
        })
    }
}

/// Seeded vector with uniform `[0, 1)` entries.
pub fn seeded_vector(m: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m).map(|_| rng.gen::<f64>()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchKind {
    /// `exp(-A) v`.
    Exp,
    /// `A^{-1/2} v`.
    InvSqrt,
    /// Error of `(A²)^{-1/2} v` against `A^{-1} v` for `A + shift·I`.
    InvSqrtError,
}

impl BenchKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Exp => "exp",
            Self::InvSqrt => "invsqrt",
            Self::InvSqrtError => "invsqrt_error",
        }
    }
}

impl FromStr for BenchKind {
    type Err = MatfunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exp" => Ok(Self::Exp),
            "invsqrt" => Ok(Self::InvSqrt),
            "invsqrt_error" => Ok(Self::InvSqrtError),
            _ => Err(MatfunError::InvalidSpec(format!("unknown bench '{s}' (exp, invsqrt, invsqrt_error)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchParams {
    pub kind: BenchKind,
    pub source: MatrixSource,
    pub degree: usize,
    pub tol: f64,
    pub maxit: usize,
    pub seed: u64,
    /// Diagonal shift added to `A` for the error benchmark.
    pub shift: f64,
    pub parallel_shifts: bool,
    /// Directory receiving the CSVs and `manifest.txt`.
    pub out: Option<PathBuf>,
}

impl BenchParams {
    pub fn new(kind: BenchKind, source: MatrixSource) -> Self {
        Self {
            kind,
            source,
            degree: 20,
            tol: 1e-12,
            maxit: 500,
            seed: 42,
            shift: 0.01,
            parallel_shifts: false,
            out: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MethodRun {
    /// `cf`, `cf_ilu0` or `pfe`.
    pub method: String,
    /// Relative residuals, or relative errors for the error benchmark.
    pub history: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub seconds: f64,
    /// Nonzeros of the assembled CF-matrix.
    pub assembled_nnz: Option<usize>,
    /// Whether the method needed complex arithmetic.
    pub complex: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub params: BenchParams,
    pub dim: usize,
    pub nnz: usize,
    pub runs: Vec<MethodRun>,
}

impl BenchResult {
    pub fn run(&self, method: &str) -> Option<&MethodRun> {
        self.runs.iter().find(|r| r.method == method)
    }

    pub fn all_converged(&self) -> bool {
        self.runs.iter().all(|r| r.converged)
    }

    fn column(&self) -> &'static str {
        if self.params.kind == BenchKind::InvSqrtError {
            "relerr"
        } else {
            "relres"
        }
    }

    pub fn manifest(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "bench: {}", p.kind.name());
        let _ = writeln!(s, "matrix: {}", p.source);
        let _ = writeln!(s, "dim: {}", self.dim);
        let _ = writeln!(s, "nnz: {}", self.nnz);
        let _ = writeln!(s, "degree: {}", p.degree);
        let _ = writeln!(s, "tol: {:e}", p.tol);
        let _ = writeln!(s, "maxit: {}", p.maxit);
        let _ = writeln!(s, "seed: {}", p.seed);
        if p.kind == BenchKind::InvSqrtError {
            let _ = writeln!(s, "shift: {}", p.shift);
        }
        for r in &self.runs {
            let _ = writeln!(
                s,
                "method: {} iterations={} converged={} final={:e} seconds={:.3} arithmetic={}{}",
                r.method,
                r.iterations,
                r.converged,
                r.history.last().copied().unwrap_or(f64::NAN),
                r.seconds,
                if r.complex { "complex" } else { "real" },
                r.assembled_nnz.map(|n| format!(" assembled_nnz={n}")).unwrap_or_default(),
            );
        }
        s
    }

    /// Writes `<bench>_<method>.csv` per method and `manifest.txt`.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, MatfunError> {
        let io = |e: std::io::Error| MatfunError::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let mut written = Vec::new();
        for r in &self.runs {
            let path = dir.join(format!("{}_{}.csv", self.params.kind.name(), r.method));
            std::fs::write(&path, history_csv(self.column(), &r.history)).map_err(io)?;
            written.push(path);
        }
        let path = dir.join("manifest.txt");
        std::fs::write(&path, self.manifest()).map_err(io)?;
        written.push(path);
        Ok(written)
    }
}

/// Runs the three methods on identical `A`, `v` and tolerance.
pub fn run_bench(params: &BenchParams) -> Result<BenchResult, MatfunError> {
    if params.degree == 0 {
        return Err(MatfunError::InvalidSpec("degree must be at least 1".into()));
    }
    let mut a = params.source.build()?;
    if params.kind == BenchKind::InvSqrtError && params.shift != 0.0 {
        a = a.shift(params.shift);
    }
    let v = seeded_vector(a.dim(), params.seed);
    let base = SolverConfig {
        tol: params.tol,
        maxit: params.maxit,
        parallel_shifts: params.parallel_shifts,
        ..SolverConfig::default()
    };
    let mut runs = Vec::new();
    match params.kind {
        BenchKind::Exp | BenchKind::InvSqrt => {
            let spec = if params.kind == BenchKind::Exp {
                FunctionSpec::exp_neg(params.degree)
            } else {
                FunctionSpec::inv_sqrt(params.degree)
            };
            for (method, precond) in [("cf", PrecondChoice::None), ("cf_ilu0", PrecondChoice::Ilu0)] {
                let t = Instant::now();
                let r = cf_apply(&spec, &a, &v, &SolverConfig { precond, ..base })?;
                runs.push(MethodRun {
                    method: method.into(),
                    iterations: r.report.iterations,
                    converged: r.report.converged,
                    history: r.report.residual_history,
                    seconds: t.elapsed().as_secs_f64(),
                    assembled_nnz: r.assembled_nnz,
                    complex: false,
                });
            }
            let t = Instant::now();
            let r = pfe_apply(&spec, &a, &v, &base)?;
            runs.push(MethodRun {
                method: "pfe".into(),
                iterations: r.report.max_iterations(),
                converged: r.report.converged,
                history: r.report.max_history,
                seconds: t.elapsed().as_secs_f64(),
                assembled_nnz: None,
                complex: !r.pfe.is_real(),
            });
        }
        BenchKind::InvSqrtError => {
            let t = Instant::now();
            let o = invsqrt_error_oracle(&a, &v, params.degree, &base, OracleRoutes::default())?;
            let seconds = t.elapsed().as_secs_f64();
            for (method, history) in o.series {
                runs.push(MethodRun {
                    complex: method == "pfe",
                    iterations: history.len().saturating_sub(1),
                    converged: true,
                    method,
                    history,
                    seconds,
                    assembled_nnz: None,
                });
            }
        }
    }
    let result = BenchResult { params: params.clone(), dim: a.dim(), nnz: a.nnz(), runs };
    if let Some(dir) = &params.out {
        result.write(dir)?;
    }
    Ok(result)
}
