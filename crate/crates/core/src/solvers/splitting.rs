//! Block Jacobi and Gauss-Seidel splittings of the CF-matrix.
//!
//! With `Ã` the diagonal or lower triangle of `A`, one step is
//! `x ← x + T(Ã)^{-1} (b - T(A) x)`. In the grid-major ordering `T(Ã)` is
//! block diagonal (Jacobi) or block lower triangular (Gauss-Seidel) with
//! tridiagonal blocks `T^(0) + ã_ii T^(1)`, so the solve is a sweep of `m`
//! small tridiagonal solves.

use super::{tridiag_solve_pivoted, SolverError};
use crate::linalg::{CFOperator, LinearOperator, SparseCSR};
use crate::pencil::PolyTridiag;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Jacobi,
    GaussSeidel,
}

impl Splitting {
    /// The approximation `Ã` of `A`.
    pub fn approximation<S: Scalar>(self, a: &SparseCSR<S>) -> SparseCSR<S> {
        match self {
            Splitting::Jacobi => a.diagonal_part(),
            Splitting::GaussSeidel => a.lower_triangle(),
        }
    }
}

/// `T(Ã)^{-1} r` for a linear family `T(z) = T^(0) + z T^(1)`; vectors use the
/// natural block-major ordering.
pub fn splitting_solve<S: Scalar>(
    p: &PolyTridiag<S>,
    a: &SparseCSR<S>,
    split: Splitting,
    r: &[S],
) -> Result<Vec<S>, SolverError> {
    if p.degree() != 1 {
        return Err(SolverError::InvalidPencil(format!("splitting needs a linear pencil, got degree {}", p.degree())));
    }
    let (nb, m) = (p.dim(), a.dim());
    if r.len() != nb * m {
        return Err(SolverError::DimensionMismatch { expected: nb * m, found: r.len() });
    }
    let (t0, t1) = (&p.terms()[0], &p.terms()[1]);
    let mut delta = vec![S::zero(); nb * m];
    let mut rhs = vec![S::zero(); nb];
    for i in 0..m {
        for k in 0..nb {
            rhs[k] = r[k * m + i];
        }
        let (cols, vals) = a.row(i);
        let mut aii = S::zero();
        for (&j, &aij) in cols.iter().zip(vals) {
            if j == i {
                aii = aij;
            } else if j < i && split == Splitting::GaussSeidel {
                // subtract ã_ij T^(1) δ_j
                let dj: Vec<S> = (0..nb).map(|k| delta[k * m + j]).collect();
                for (k, v) in t1.matvec(&dj).into_iter().enumerate() {
                    rhs[k] -= aij * v;
                }
            }
        }
        let blk = t0.add_scaled(aii, t1);
        let d = tridiag_solve_pivoted(&blk, &rhs).map_err(|_| SolverError::SingularTridiagonalBlock { index: i })?;
        for k in 0..nb {
            delta[k * m + i] = d[k];
        }
    }
    Ok(delta)
}

/// One splitting step `x + T(Ã)^{-1}(b - T(A) x)`.
pub fn splitting_step<S: Scalar>(
    p: &PolyTridiag<S>,
    a: &SparseCSR<S>,
    split: Splitting,
    x: &[S],
    b: &[S],
) -> Result<Vec<S>, SolverError> {
    let op = CFOperator::new(p.clone(), a);
    let mut r = vec![S::zero(); x.len()];
    op.try_apply(x, &mut r)?;
    r.iter_mut().zip(b).for_each(|(ri, &bi)| *ri = bi - *ri);
    let d = splitting_solve(p, a, split, &r)?;
    Ok(x.iter().zip(d).map(|(&xi, di)| xi + di).collect())
}

/// The error propagator `M_T = I - T(Ã)^{-1} T(A)` as an operator.
pub struct SplittingPropagator<'a, S> {
    op: CFOperator<'a, S>,
    split: Splitting,
}

impl<'a, S: Scalar> SplittingPropagator<'a, S> {
    pub fn new(p: &PolyTridiag<S>, a: &'a SparseCSR<S>, split: Splitting) -> Result<Self, SolverError> {
        if p.degree() != 1 {
            return Err(SolverError::InvalidPencil("splitting needs a linear pencil".into()));
        }
        Ok(Self { op: CFOperator::new(p.clone(), a), split })
    }
}

impl<S: Scalar> LinearOperator<S> for SplittingPropagator<'_, S> {
    fn dim(&self) -> usize {
        self.op.dim()
    }

    fn apply(&self, x: &[S], y: &mut [S]) {
        let tx = self.op.apply_new(x);
        let d = splitting_solve(self.op.pencil(), self.op.matrix(), self.split, &tx)
            .expect("tridiagonal blocks checked nonsingular before use");
        for ((yi, &xi), di) in y.iter_mut().zip(x).zip(d) {
            *yi = xi - di;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::TridiagPencil;

    #[test]
    fn exact_for_diagonal_a() {
        let cf = crate::confrac::exp_cfraction::<f64>(4);
        let p = TridiagPencil::from_contracted(&cf).unwrap().poly();
        let a = SparseCSR::diagonal(&[0.5, 1.0, 2.0]);
        let b: Vec<f64> = (0..9).map(|i| 1.0 + i as f64).collect();
        for split in [Splitting::Jacobi, Splitting::GaussSeidel] {
            let x = splitting_step(&p, &a, split, &[0.0; 9], &b).unwrap();
            let op = CFOperator::new(p.clone(), &a);
            let r: f64 = op.apply_new(&x).iter().zip(&b).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
            assert!(r < 1e-12);
        }
    }
}
