//! `r(A) v` from a partial fraction expansion: one shifted solve per pole.

use super::{gmres, GmresConfig, Preconditioner, SolveReport, SolverError};
use crate::linalg::SparseCSR;
use crate::pencil::PartialFractionExpansion;
use crate::scalar::{Complex64, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ShiftedConfig {
    pub gmres: GmresConfig,
    /// ILU(0) of each shifted matrix `A - τ_j I`.
    pub ilu0: bool,
    /// Solve the shifts on separate threads.
    pub parallel: bool,
}

#[derive(Clone, Debug)]
pub struct ShiftedReport {
    /// `-Σ_j ω_j x_j + σ v` with `(A - τ_j I) x_j = v`.
    pub y: Vec<Complex64>,
    /// Per iteration, the largest relative residual over all shifts; shifts
    /// that stopped earlier contribute their final value.
    pub max_history: Vec<f64>,
    pub per_shift: Vec<SolveReport<Complex64>>,
    pub converged: bool,
}

impl ShiftedReport {
    /// Iterations of the slowest shift.
    pub fn max_iterations(&self) -> usize {
        self.per_shift.iter().map(|r| r.iterations).max().unwrap_or(0)
    }
}

pub fn shifted_solver<S: Scalar>(
    a: &SparseCSR<S>,
    pfe: &PartialFractionExpansion,
    v: &[S],
    cfg: &ShiftedConfig,
) -> Result<ShiftedReport, SolverError> {
    let m = a.dim();
    if v.len() != m {
        return Err(SolverError::DimensionMismatch { expected: m, found: v.len() });
    }
    let ac = a.to_complex();
    let vc: Vec<Complex64> = v.iter().map(|x| x.to_complex()).collect();
    let solve_one = |tau: Complex64| -> Result<SolveReport<Complex64>, SolverError> {
        let shifted = ac.shift(-tau);
        let pre = if cfg.ilu0 { Preconditioner::ilu0(&shifted)? } else { Preconditioner::None };
        Ok(gmres(&shifted, &vc, &pre, &cfg.gmres))
    };
    let reports: Vec<SolveReport<Complex64>> = if cfg.parallel && pfe.len() > 1 {
        std::thread::scope(|s| {
            let handles: Vec<_> = pfe.poles.iter().map(|&tau| s.spawn(move || solve_one(tau))).collect();
            handles.into_iter().map(|h| h.join().expect("shift solver thread panicked")).collect::<Result<_, _>>()
        })?
    } else {
        pfe.poles.iter().map(|&tau| solve_one(tau)).collect::<Result<_, _>>()?
    };

    let mut y: Vec<Complex64> = vc.iter().map(|&x| pfe.constant * x).collect();
    for (rep, &w) in reports.iter().zip(&pfe.weights) {
        for (yi, &xi) in y.iter_mut().zip(&rep.solution) {
            *yi -= w * xi;
        }
    }
    let len = reports.iter().map(|r| r.residual_history.len()).max().unwrap_or(1);
    let max_history = (0..len)
        .map(|k| {
            reports
                .iter()
                .map(|r| *r.residual_history.get(k).unwrap_or_else(|| r.residual_history.last().unwrap()))
                .fold(0.0, f64::max)
        })
        .collect();
    let converged = reports.iter().all(|r| r.converged);
    Ok(ShiftedReport { y, max_history, per_shift: reports, converged })
}
