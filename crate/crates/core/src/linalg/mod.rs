//! Sparse and small dense kernels: CSR storage, the CF-matrix operator, test
//! matrix generators, a dense eigensolver and the Kronecker shuffle.

mod cfop;
mod csr;
mod dense;
mod eigen;
mod generators;
mod kron;
mod mmio;
mod operator;

pub use cfop::CFOperator;
pub use csr::SparseCSR;
pub use dense::{DenseLu, DenseMatrix};
pub use eigen::{
    arnoldi_spectral_radius, balance, dense_eigenvalues, dense_eigenvector, polynomial_roots, power_iteration, DENSE_CAP,
};
pub use generators::{laplace2d, random_mmatrix, MMATRIX_SHIFT};
pub use kron::KronPermutation;
pub use mmio::{
    format_matrix_market, format_vector, parse_matrix_market, parse_vector, read_matrix_market, read_vector,
    write_matrix_market, write_vector,
};
pub use operator::{FnOperator, Identity, LinearOperator};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) outside a {dim}×{dim} matrix")]
    IndexOutOfBounds { row: usize, col: usize, dim: usize },
    #[error("invalid sparse structure: {0}")]
    InvalidStructure(String),
    #[error("matrix is singular (zero pivot in column {pivot})")]
    SingularMatrix { pivot: usize },
    #[error("dimension {dim} exceeds the dense cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("iteration did not converge (last estimate {estimate})")]
    NoConvergence { estimate: f64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}
