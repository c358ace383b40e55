//! Solvers for the CF system and the shifted systems: full GMRES, ILU(0),
//! block UDL elimination, block splittings and tridiagonal solves.

mod gmres;
mod ilu;
mod shifted;
mod splitting;
mod tridiag;
mod udl;

pub use gmres::{gmres, gmres_monitored, GmresConfig};
pub use ilu::{Ilu0, Preconditioner};
pub use shifted::{shifted_solver, ShiftedConfig, ShiftedReport};
pub use splitting::{splitting_solve, splitting_step, Splitting, SplittingPropagator};
pub use tridiag::{tridiag_solve, tridiag_solve_pivoted};
pub use udl::{block_udl_solve, UdlSolution};

use std::fmt::Write as _;

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("zero pivot in row {row}")]
    ZeroPivot { row: usize },
    #[error("block Schur complement {level} is singular")]
    SingularSchurComplement { level: usize },
    #[error("tridiagonal block for grid index {index} is singular")]
    SingularTridiagonalBlock { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0}")]
    InvalidPencil(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Outcome of an iterative solve. Running out of iterations is not an error;
/// `converged` is false instead.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport<S> {
    pub solution: Vec<S>,
    /// Relative residuals `‖b - A x_k‖ / ‖b‖`, starting with `k = 0`.
    pub residual_history: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl<S> SolveReport<S> {
    pub fn final_residual(&self) -> f64 {
        *self.residual_history.last().expect("history is never empty")
    }

    /// `iteration,relres` lines.
    pub fn to_csv(&self) -> String {
        history_csv("relres", &self.residual_history)
    }
}

/// Two-column CSV of a per-iteration series.
pub fn history_csv(column: &str, values: &[f64]) -> String {
    let mut out = format!("iteration,{column}\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{k},{v:e}");
    }
    out
}
