//! `r(A) v` through the CF-matrix and through partial fractions, plus the
//! error oracle, the Sylvester reshaping and the splitting spectrum checks.

mod bench;
mod oracle;
mod spectral;
mod sylvester;

pub use bench::{run_bench, seeded_vector, BenchKind, BenchParams, BenchResult, MatrixSource, MethodRun};
pub use oracle::{invsqrt_error_oracle, ErrorOracle, OracleRoutes};
pub use spectral::{
    eig_transport_check, match_spectra, propagator_dense, shifted_propagator_dense, smoother_spectrum_check,
    SpectrumComparison,
};
pub use sylvester::{sylvester_form, SylvesterForm};

use thiserror::Error;

use crate::confrac::{exp_cfraction, sqrt1p_cfraction, CfError, ContinuedFraction};
use crate::linalg::{CFOperator, LinalgError, LinearOperator, SparseCSR};
use crate::pencil::{PartialFractionExpansion, PencilError, TridiagPencil};
use crate::scalar::Complex64;
use crate::solvers::{
    gmres_monitored, shifted_solver, GmresConfig, Preconditioner, ShiftedConfig, ShiftedReport, SolveReport,
    SolverError,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatfunError {
    #[error("invalid function spec: {0}")]
    InvalidSpec(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum FunctionKind {
    /// `e^{-z}`: the C-fraction of `e^z` inverted through the pencil.
    ExpNeg,
    /// `z^{-1/2}`: the C-fraction of `√(1+z)` with the variable shifted by one.
    InvSqrt,
    /// Any regular C-fraction `g`; the pencil computes `1 / g`.
    CustomCf(ContinuedFraction<f64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PencilForm {
    /// `n` levels, pencil of size `n + 1`.
    Plain,
    /// `2n` levels contracted, pencil of size `n + 1`.
    Contracted,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionSpec {
    pub kind: FunctionKind,
    pub degree: usize,
    pub form: PencilForm,
    /// The pencil used is `T(z - shift)`.
    pub variable_shift: f64,
}

impl FunctionSpec {
    pub fn exp_neg(degree: usize) -> Self {
        Self { kind: FunctionKind::ExpNeg, degree, form: PencilForm::Contracted, variable_shift: 0.0 }
    }

    pub fn inv_sqrt(degree: usize) -> Self {
        Self { kind: FunctionKind::InvSqrt, degree, form: PencilForm::Contracted, variable_shift: 1.0 }
    }

    pub fn with_form(mut self, form: PencilForm) -> Self {
        self.form = form;
        self
    }

    /// The continued fraction before any pencil transformation.
    pub fn cfraction(&self) -> Result<ContinuedFraction<f64>, MatfunError> {
        if self.degree == 0 {
            return Err(MatfunError::InvalidSpec("degree must be at least 1".into()));
        }
        let levels = match self.form {
            PencilForm::Plain => self.degree,
            PencilForm::Contracted => 2 * self.degree,
        };
        Ok(match &self.kind {
            FunctionKind::ExpNeg => exp_cfraction(levels),
            FunctionKind::InvSqrt => sqrt1p_cfraction(levels),
            FunctionKind::CustomCf(cf) => cf.truncate(levels)?,
        })
    }

    pub fn pencil(&self) -> Result<TridiagPencil<f64>, MatfunError> {
        let cf = self.cfraction()?;
        let p = match self.form {
            PencilForm::Plain => TridiagPencil::from_cfraction(&cf)?,
            PencilForm::Contracted => TridiagPencil::from_contracted(&cf)?,
        };
        Ok(if self.variable_shift == 0.0 { p } else { p.shift_variable(self.variable_shift) })
    }

    /// The function being approximated, where known in closed form.
    pub fn exact(&self, z: Complex64) -> Option<Complex64> {
        match self.kind {
            FunctionKind::ExpNeg => Some((-z).exp()),
            FunctionKind::InvSqrt => Some(1.0 / z.sqrt()),
            FunctionKind::CustomCf(_) => None,
        }
    }
}

/// The `√z` pencil of degree `n`: contracted `√(1+z)` fraction with `2n`
/// levels, returned as `(T0 + T1, T1)`.
pub fn invsqrt_pencil(n: usize) -> Result<TridiagPencil<f64>, MatfunError> {
    FunctionSpec::inv_sqrt(n).pencil()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecondChoice {
    None,
    Ilu0,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub tol: f64,
    pub maxit: usize,
    pub precond: PrecondChoice,
    /// Preconditioning of the shifted systems on the partial fraction route.
    pub pfe_precond: PrecondChoice,
    pub parallel_shifts: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { tol: 1e-12, maxit: 500, precond: PrecondChoice::Ilu0, pfe_precond: PrecondChoice::None, parallel_shifts: false }
    }
}

impl SolverConfig {
    fn gmres(&self) -> GmresConfig {
        GmresConfig { tol: self.tol, maxit: self.maxit }
    }
}

#[derive(Clone, Debug)]
pub struct CfApply {
    /// First block of the solution, `r(A) v`.
    pub y: Vec<f64>,
    pub report: SolveReport<f64>,
    /// Nonzeros of the assembled CF-matrix when it was assembled.
    pub assembled_nnz: Option<usize>,
}

/// `r(A) v` from `T(A) x = e_1 ⊗ v`. Without preconditioning the CF-matrix is
/// applied matrix-free; ILU(0) needs it assembled (natural block ordering).
pub fn cf_apply(spec: &FunctionSpec, a: &SparseCSR<f64>, v: &[f64], cfg: &SolverConfig) -> Result<CfApply, MatfunError> {
    cf_apply_monitored(spec, a, v, cfg, &mut |_, _| {})
}

/// As [`cf_apply`], handing the first block of every iterate to `monitor`.
pub fn cf_apply_monitored(
    spec: &FunctionSpec,
    a: &SparseCSR<f64>,
    v: &[f64],
    cfg: &SolverConfig,
    monitor: &mut dyn FnMut(usize, &[f64]),
) -> Result<CfApply, MatfunError> {
    let pencil = spec.pencil()?;
    cf_apply_pencil(&pencil, a, v, cfg, monitor)
}

pub fn cf_apply_pencil(
    pencil: &TridiagPencil<f64>,
    a: &SparseCSR<f64>,
    v: &[f64],
    cfg: &SolverConfig,
    monitor: &mut dyn FnMut(usize, &[f64]),
) -> Result<CfApply, MatfunError> {
    let m = a.dim();
    if v.len() != m {
        return Err(MatfunError::DimensionMismatch { expected: m, found: v.len() });
    }
    if !pencil.is_regular() {
        return Err(PencilError::IrregularPencil.into());
    }
    let op = CFOperator::new(pencil.poly(), a);
    let mut rhs = vec![0.0; op.dim()];
    rhs[..m].copy_from_slice(v);
    let mut mon = |k: usize, x: &[f64], _r: f64| monitor(k, &x[..m]);
    let (report, assembled_nnz) = match cfg.precond {
        PrecondChoice::None => (gmres_monitored(&op, &rhs, &Preconditioner::None, &cfg.gmres(), &mut mon), None),
        PrecondChoice::Ilu0 => {
            let mat = op.assemble()?;
            let pre = Preconditioner::ilu0(&mat)?;
            let nnz = mat.nnz();
            (gmres_monitored(&mat, &rhs, &pre, &cfg.gmres(), &mut mon), Some(nnz))
        }
    };
    Ok(CfApply { y: report.solution[..m].to_vec(), report, assembled_nnz })
}

#[derive(Clone, Debug)]
pub struct PfeApply {
    /// Real part of `-Σ ω_j x_j + σ v`.
    pub y: Vec<f64>,
    /// Largest imaginary part discarded from `y`.
    pub discarded_imag: f64,
    pub report: ShiftedReport,
    pub pfe: PartialFractionExpansion,
}

pub fn pfe_apply(spec: &FunctionSpec, a: &SparseCSR<f64>, v: &[f64], cfg: &SolverConfig) -> Result<PfeApply, MatfunError> {
    let pfe = spec.pencil()?.pfe()?;
    pfe_apply_expansion(pfe, a, v, cfg)
}

pub fn pfe_apply_expansion(
    pfe: PartialFractionExpansion,
    a: &SparseCSR<f64>,
    v: &[f64],
    cfg: &SolverConfig,
) -> Result<PfeApply, MatfunError> {
    let scfg = ShiftedConfig {
        gmres: cfg.gmres(),
        ilu0: cfg.pfe_precond == PrecondChoice::Ilu0,
        parallel: cfg.parallel_shifts,
    };
    let report = shifted_solver(a, &pfe, v, &scfg)?;
    let y = report.y.iter().map(|z| z.re).collect();
    let discarded_imag = report.y.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    Ok(PfeApply { y, discarded_imag, report, pfe })
}
