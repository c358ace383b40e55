//! Rational matrix functions `r(A) v` through continued fractions.
//!
//! A rational function given as a continued fraction is turned into a small
//! tridiagonal pencil `T(z)`; the action `r(A) v` is the first block of the
//! solution of the block-tridiagonal system `T(A) x = e_1 ⊗ v`. The same pencil
//! yields the poles and weights of the partial fraction expansion, so both
//! routes can be compared on equal footing.

pub mod confrac;
pub mod linalg;
pub mod matfun;
pub mod pencil;
pub mod scalar;
pub mod solvers;

pub use scalar::{Complex64, Scalar};
