//! Full (unrestarted) GMRES with left preconditioning.

use super::{Preconditioner, SolveReport};
use crate::linalg::LinearOperator;
use crate::scalar::{axpy, dot, norm2, Scalar};

/// Loss of orthogonality above which a second Gram-Schmidt pass is made.
const REORTH_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GmresConfig {
    /// Relative residual `‖b - A x‖ / ‖b‖` at which to stop.
    pub tol: f64,
    pub maxit: usize,
}

impl Default for GmresConfig {
    fn default() -> Self {
        Self { tol: 1e-12, maxit: 500 }
    }
}

pub fn gmres<S: Scalar, O: LinearOperator<S> + ?Sized>(
    op: &O,
    b: &[S],
    precond: &Preconditioner<S>,
    cfg: &GmresConfig,
) -> SolveReport<S> {
    gmres_monitored(op, b, precond, cfg, &mut |_, _, _| {})
}

/// GMRES calling `monitor(k, x_k, relres_k)` after every iteration (and once
/// for `k = 0`). The residual history holds true residuals of the
/// unpreconditioned system, recomputed from each iterate.
pub fn gmres_monitored<S: Scalar, O: LinearOperator<S> + ?Sized>(
    op: &O,
    b: &[S],
    precond: &Preconditioner<S>,
    cfg: &GmresConfig,
    monitor: &mut dyn FnMut(usize, &[S], f64),
) -> SolveReport<S> {
    let n = op.dim();
    assert_eq!(b.len(), n, "right-hand side length");
    let bnorm = norm2(b);
    let mut x = vec![S::zero(); n];
    if bnorm == 0.0 {
        monitor(0, &x, 0.0);
        return SolveReport { solution: x, residual_history: vec![0.0], iterations: 0, converged: true };
    }
    let mut history = vec![1.0];
    monitor(0, &x, 1.0);

    let mut z = vec![S::zero(); n];
    precond.apply(b, &mut z);
    let beta = norm2(&z);
    if beta == 0.0 || !beta.is_finite() {
        return SolveReport { solution: x, residual_history: history, iterations: 0, converged: false };
    }
    let mut basis: Vec<Vec<S>> = vec![z.iter().map(|&v| v / S::from_real(beta)).collect()];
    // Hessenberg columns after rotation (upper triangular R), rotations, rhs g
    let mut r_cols: Vec<Vec<S>> = Vec::new();
    let mut rot: Vec<(S, S)> = Vec::new();
    let mut g = vec![S::from_real(beta)];
    let mut w = vec![S::zero(); n];
    let mut tmp = vec![S::zero(); n];
    let mut res = vec![S::zero(); n];

    for k in 0..cfg.maxit {
        op.apply(&basis[k], &mut tmp);
        precond.apply(&tmp, &mut w);
        let mut h = vec![S::zero(); k + 2];
        for (i, v) in basis.iter().enumerate() {
            let c = dot(v, &w);
            h[i] = c;
            axpy(-c, v, &mut w);
        }
        let wn = norm2(&w);
        let mut worst = 0.0f64;
        let second: Vec<S> = basis.iter().map(|v| dot(v, &w)).collect();
        for c in &second {
            worst = worst.max(c.abs());
        }
        if worst > REORTH_THRESHOLD * wn {
            for (i, (v, &c)) in basis.iter().zip(&second).enumerate() {
                h[i] += c;
                axpy(-c, v, &mut w);
            }
        }
        let hn = norm2(&w);
        h[k + 1] = S::from_real(hn);

        for (i, &(c, s)) in rot.iter().enumerate() {
            let (a, bb) = (h[i], h[i + 1]);
            h[i] = c.conj() * a + s.conj() * bb;
            h[i + 1] = -s * a + c * bb;
        }
        let (c, s) = givens(h[k], h[k + 1]);
        h[k] = c.conj() * h[k] + s.conj() * h[k + 1];
        h[k + 1] = S::zero();
        let gk = g[k];
        g[k] = c.conj() * gk;
        g.push(-s * gk);
        rot.push((c, s));
        h.truncate(k + 1);
        r_cols.push(h);

        // x_k = V_k y_k with R y = g
        let m = k + 1;
        let mut y = g[..m].to_vec();
        for i in (0..m).rev() {
            for j in i + 1..m {
                let t = r_cols[j][i] * y[j];
                y[i] -= t;
            }
            y[i] /= r_cols[i][i];
        }
        x.iter_mut().for_each(|v| *v = S::zero());
        for (v, &yi) in basis.iter().zip(&y) {
            axpy(yi, v, &mut x);
        }
        op.apply(&x, &mut res);
        res.iter_mut().zip(b).for_each(|(r, &bi)| *r = bi - *r);
        let relres = norm2(&res) / bnorm;
        history.push(relres);
        monitor(m, &x, relres);
        if relres <= cfg.tol {
            return SolveReport { solution: x, residual_history: history, iterations: m, converged: true };
        }
        if hn == 0.0 || !relres.is_finite() || r_cols[k][k].is_zero() {
            // Krylov space exhausted; nothing more to gain
            return SolveReport { solution: x, residual_history: history, iterations: m, converged: false };
        }
        basis.push(w.iter().map(|&v| v / S::from_real(hn)).collect());
    }
    let iterations = history.len() - 1;
    SolveReport { solution: x, residual_history: history, iterations, converged: false }
}

/// Rotation `(c, s)` with `[c̄ s̄; -s c] [a; b] = [r; 0]`, `r ≥ 0` real.
fn givens<S: Scalar>(a: S, b: S) -> (S, S) {
    let r = a.abs().hypot(b.abs());
    if r == 0.0 {
        return (S::one(), S::zero());
    }
    let r = S::from_real(r);
    (a / r, b / r)
}
