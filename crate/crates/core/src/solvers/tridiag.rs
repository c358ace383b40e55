//! Direct solves with a single tridiagonal matrix.

use super::SolverError;
use crate::pencil::Tridiag;
use crate::scalar::Scalar;

/// Thomas elimination without pivoting.
pub fn tridiag_solve<S: Scalar>(sub: &[S], diag: &[S], sup: &[S], rhs: &[S]) -> Result<Vec<S>, SolverError> {
    let n = diag.len();
    if rhs.len() != n || sub.len() + 1 != n.max(1) || sup.len() + 1 != n.max(1) {
        return Err(SolverError::DimensionMismatch { expected: n, found: rhs.len() });
    }
    let mut c = vec![S::zero(); n];
    let mut x = rhs.to_vec();
    for i in 0..n {
        let mut piv = diag[i];
        if i > 0 {
            piv -= sub[i - 1] * c[i - 1];
            let xi = x[i - 1];
            x[i] -= sub[i - 1] * xi;
        }
        if piv.is_zero() {
            return Err(SolverError::ZeroPivot { row: i });
        }
        if i + 1 < n {
            c[i] = sup[i] / piv;
        }
        x[i] /= piv;
    }
    for i in (0..n.saturating_sub(1)).rev() {
        let next = x[i + 1];
        x[i] -= c[i] * next;
    }
    Ok(x)
}

/// Gaussian elimination with partial pivoting (row interchanges create one
/// extra superdiagonal of fill).
pub fn tridiag_solve_pivoted<S: Scalar>(t: &Tridiag<S>, rhs: &[S]) -> Result<Vec<S>, SolverError> {
    let n = t.dim();
    if rhs.len() != n {
        return Err(SolverError::DimensionMismatch { expected: n, found: rhs.len() });
    }
    let mut dl = t.sub.clone();
    let mut d = t.diag.clone();
    let mut du = t.sup.clone();
    let mut du2 = vec![S::zero(); n.saturating_sub(2)];
    let mut b = rhs.to_vec();
    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i].is_zero() {
                return Err(SolverError::ZeroPivot { row: i });
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            let bi = b[i];
            b[i + 1] -= fact * bi;
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            let temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - fact * b[i + 1];
        }
        dl[i] = S::zero();
    }
    if d[n - 1].is_zero() {
        return Err(SolverError::ZeroPivot { row: n - 1 });
    }
    let mut x = b;
    x[n - 1] /= d[n - 1];
    if n > 1 {
        let xn = x[n - 1];
        x[n - 2] = (x[n - 2] - du[n - 2] * xn) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        let (x1, x2) = (x[i + 1], x[i + 2]);
        x[i] = (x[i] - du[i] * x1 - du2[i] * x2) / d[i];
    }
    Ok(x)
}
