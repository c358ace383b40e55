//! Error of the inverse square root approximation from `(A²)^{-1/2} = A^{-1}`.

use super::{cf_apply_monitored, FunctionSpec, MatfunError, PrecondChoice, SolverConfig};
use crate::linalg::SparseCSR;
use crate::scalar::{norm2, Complex64};
use crate::solvers::{gmres, gmres_monitored, GmresConfig, Preconditioner};

/// Which routes the oracle runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleRoutes {
    pub cf_plain: bool,
    pub cf_ilu0: bool,
    pub pfe: bool,
}

impl Default for OracleRoutes {
    fn default() -> Self {
        Self { cf_plain: true, cf_ilu0: true, pfe: true }
    }
}

#[derive(Clone, Debug)]
pub struct ErrorOracle {
    /// Relative residual reached by the reference solve `A x* = v`.
    pub truth_residual: f64,
    /// Per method name, the relative error `‖y_k - x*‖ / ‖x*‖` of every iterate.
    pub series: Vec<(String, Vec<f64>)>,
}

impl ErrorOracle {
    /// The error level a method settles at: its final value.
    pub fn plateau(&self, method: &str) -> Option<f64> {
        self.series.iter().find(|(m, _)| m == method).and_then(|(_, s)| s.last().copied())
    }
}

/// Runs the `√z` approximation of degree `n` on `A²` and compares each
/// iterate with `x* = A^{-1} v` (GMRES with ILU(0) to `1e-14`).
pub fn invsqrt_error_oracle(
    a: &SparseCSR<f64>,
    v: &[f64],
    n: usize,
    cfg: &SolverConfig,
    routes: OracleRoutes,
) -> Result<ErrorOracle, MatfunError> {
    let m = a.dim();
    if v.len() != m {
        return Err(MatfunError::DimensionMismatch { expected: m, found: v.len() });
    }
    let truth_cfg = GmresConfig { tol: 1e-14, maxit: cfg.maxit.max(2000) };
    let truth = gmres(a, v, &Preconditioner::ilu0(a)?, &truth_cfg);
    let x_star = truth.solution;
    let xn = norm2(&x_star);
    let rel_err = |y: &[f64]| norm2(&y.iter().zip(&x_star).map(|(p, q)| p - q).collect::<Vec<_>>()) / xn;

    let a2 = a.matmul(a)?;
    let spec = FunctionSpec::inv_sqrt(n);
    let mut series = Vec::new();
    for (name, on, pre) in [("cf", routes.cf_plain, PrecondChoice::None), ("cf_ilu0", routes.cf_ilu0, PrecondChoice::Ilu0)] {
        if !on {
            continue;
        }
        let mut errs = Vec::new();
        let c = SolverConfig { precond: pre, ..*cfg };
        cf_apply_monitored(&spec, &a2, v, &c, &mut |_, y| errs.push(rel_err(y)))?;
        series.push((name.to_string(), errs));
    }
    if routes.pfe {
        let pfe = spec.pencil()?.pfe()?;
        let ac = a2.to_complex();
        let vc: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        // acc[k] holds -Σ ω_j x_j^(k) over the shifts still iterating at k;
        // finished shifts are folded in through `done` at their last iterate.
        let mut acc: Vec<Vec<Complex64>> = Vec::new();
        let mut finals: Vec<(usize, Vec<Complex64>)> = Vec::new();
        for (&tau, &w) in pfe.poles.iter().zip(&pfe.weights) {
            let shifted = ac.shift(-tau);
            let pre = if cfg.pfe_precond == PrecondChoice::Ilu0 { Preconditioner::ilu0(&shifted)? } else { Preconditioner::None };
            let mut last = 0;
            let rep = gmres_monitored(&shifted, &vc, &pre, &cfg.gmres(), &mut |k, x, _| {
                if acc.len() <= k {
                    acc.resize(k + 1, vec![Complex64::new(0.0, 0.0); m]);
                }
                for (s, &xi) in acc[k].iter_mut().zip(x) {
                    *s -= w * xi;
                }
                last = k;
            });
            finals.push((last, rep.solution.iter().map(|&xi| -w * xi).collect()));
        }
        let mut errs = Vec::with_capacity(acc.len());
        for (k, yk) in acc.iter().enumerate() {
            let mut y: Vec<f64> = yk.iter().zip(v).map(|(s, &vi)| (s + pfe.constant * vi).re).collect();
            for (last, contrib) in &finals {
                if *last < k {
                    y.iter_mut().zip(contrib).for_each(|(yi, c)| *yi += c.re);
                }
            }
            errs.push(rel_err(&y));
        }
        series.push(("pfe".to_string(), errs));
    }
    Ok(ErrorOracle { truth_residual: truth.residual_history.last().copied().unwrap_or(f64::NAN), series })
}
