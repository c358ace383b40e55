//! Small dense eigenproblems, polynomial roots and spectral-radius estimates.
//!
//! Balancing is done here; the Hessenberg reduction and shifted QR sweeps come
//! from nalgebra's real and complex Schur decompositions.

use nalgebra::{DMatrix, Schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{DenseMatrix, LinalgError, LinearOperator};
use crate::confrac::Polynomial;
use crate::scalar::{dot, norm2, Complex64, Scalar};

/// Largest dimension accepted by the dense eigensolver.
pub const DENSE_CAP: usize = 2048;

const QR_MAX_ITER: usize = 10_000;

/// Diagonal similarity scaling with powers of two (Parlett and Reinsch),
/// which leaves eigenvalues untouched but shrinks the norm.
pub fn balance<S: Scalar>(m: &DenseMatrix<S>) -> DenseMatrix<S> {
    let n = m.dim();
    let mut a = m.clone();
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let (mut c, mut r) = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let (mut cc, mut rr) = (c, r);
            while cc < rr / 2.0 {
                cc *= 2.0;
                rr /= 2.0;
                f *= 2.0;
            }
            while cc >= rr * 2.0 {
                cc /= 2.0;
                rr *= 2.0;
                f /= 2.0;
            }
            if (cc + rr) < 0.95 * s {
                converged = false;
                let fs = S::from_real(f);
                let fi = S::from_real(1.0 / f);
                for j in 0..n {
                    a[(i, j)] *= fi;
                    a[(j, i)] *= fs;
                }
            }
        }
    }
    a
}

/// All eigenvalues of a small dense matrix.
pub fn dense_eigenvalues<S: Scalar>(m: &DenseMatrix<S>) -> Result<Vec<Complex64>, LinalgError> {
    let n = m.dim();
    if n == 0 {
        return Ok(vec![]);
    }
    if n > DENSE_CAP {
        return Err(LinalgError::DimensionTooLarge { dim: n, cap: DENSE_CAP });
    }
    let b = balance(m);
    let eps = f64::EPSILON;
    if S::IS_COMPLEX {
        let mat = DMatrix::from_fn(n, n, |i, j| b[(i, j)].to_complex());
        let schur = Schur::try_new(mat, eps, QR_MAX_ITER).ok_or(LinalgError::NoConvergence { estimate: f64::NAN })?;
        Ok(schur.eigenvalues().ok_or(LinalgError::NoConvergence { estimate: f64::NAN })?.iter().copied().collect())
    } else {
        let mat = DMatrix::from_fn(n, n, |i, j| b[(i, j)].re());
        let schur = Schur::try_new(mat, eps, QR_MAX_ITER).ok_or(LinalgError::NoConvergence { estimate: f64::NAN })?;
        Ok(schur.complex_eigenvalues().iter().copied().collect())
    }
}

/// Roots of a polynomial as eigenvalues of its balanced companion matrix.
pub fn polynomial_roots<S: Scalar>(p: &Polynomial<S>) -> Result<Vec<Complex64>, LinalgError> {
    let d = p.degree();
    if d == 0 {
        return Ok(vec![]);
    }
    let lead = p.leading();
    let comp = DenseMatrix::from_fn(d, |i, j| {
        if j == d - 1 {
            -p.coeff(i) / lead
        } else if i == j + 1 {
            S::one()
        } else {
            S::zero()
        }
    });
    dense_eigenvalues(&comp)
}

/// Unit eigenvector for an approximate eigenvalue by shifted inverse iteration.
pub fn dense_eigenvector<S: Scalar>(m: &DenseMatrix<S>, lambda: Complex64) -> Result<Vec<Complex64>, LinalgError> {
    let n = m.dim();
    let mc = m.to_complex();
    let scale = mc.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = 1e-8 * scale;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for attempt in 0..4 {
        let delta = scale * 1e-13 * 10f64.powi(attempt) * Complex64::new(1.0, 1.0);
        let shifted = DenseMatrix::from_fn(n, |i, j| {
            let v = mc[(i, j)];
            if i == j {
                v - lambda - delta
            } else {
                v
            }
        });
        let Ok(lu) = shifted.lu() else { continue };
        let mut x: Vec<Complex64> = (0..n).map(|_| Complex64::new(rng.gen_range(0.5..1.5), rng.gen_range(-0.5..0.5))).collect();
        for _ in 0..30 {
            let y = lu.solve(&x);
            let nrm = norm2(&y);
            if !nrm.is_finite() || nrm == 0.0 {
                break;
            }
            x = y.into_iter().map(|v| v / nrm).collect();
            let mx = mc.matvec(&x);
            let res = norm2(&mx.iter().zip(&x).map(|(a, b)| *a - lambda * *b).collect::<Vec<_>>());
            if best.as_ref().map_or(true, |b| res < b.0) {
                best = Some((res, x.clone()));
            }
            if res <= target {
                return Ok(x);
            }
        }
    }
    Err(LinalgError::NoConvergence { estimate: best.map_or(f64::NAN, |b| b.0) })
}

/// Dominant eigenvalue modulus by power iteration with a seeded start vector.
pub fn power_iteration<S: Scalar, O: LinearOperator<S> + ?Sized>(
    op: &O,
    maxit: usize,
    tol: f64,
) -> Result<(f64, Vec<S>), LinalgError> {
    let n = op.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut x: Vec<S> = (0..n).map(|_| S::from_real(rng.gen_range(0.5..1.5))).collect();
    let nrm = norm2(&x);
    x.iter_mut().for_each(|v| *v /= S::from_real(nrm));
    let mut y = vec![S::zero(); n];
    let mut last = f64::NAN;
    for _ in 0..maxit {
        op.apply(&x, &mut y);
        let est = dot(&x, &y).abs();
        let ny = norm2(&y);
        if ny == 0.0 {
            return Ok((0.0, x));
        }
        x.iter_mut().zip(&y).for_each(|(xi, yi)| *xi = *yi / S::from_real(ny));
        if (est - last).abs() <= tol * est {
            return Ok((est, x));
        }
        last = est;
    }
    Err(LinalgError::NoConvergence { estimate: last })
}

/// Spectral radius from the Ritz values of a `k`-step Arnoldi process.
///
/// Power iteration stalls when the dominant eigenvalues come in pairs of
/// equal modulus (typical for error propagators with ±λ spectra); Ritz values
/// do not care.
pub fn arnoldi_spectral_radius<S: Scalar, O: LinearOperator<S> + ?Sized>(op: &O, k: usize) -> Result<f64, LinalgError> {
    let n = op.dim();
    let k = k.min(n).min(DENSE_CAP);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut v: Vec<Vec<S>> = Vec::with_capacity(k + 1);
    let mut x: Vec<S> = (0..n).map(|_| S::from_real(rng.gen_range(0.5..1.5))).collect();
    let nrm = norm2(&x);
    x.iter_mut().for_each(|e| *e /= S::from_real(nrm));
    v.push(x);
    let mut h = DenseMatrix::<Complex64>::zeros(k);
    let mut steps = k;
    for j in 0..k {
        let mut w = op.apply_new(&v[j]);
        for _pass in 0..2 {
            for (i, vi) in v.iter().enumerate() {
                let c = dot(vi, &w);
                h[(i, j)] += c.to_complex();
                crate::scalar::axpy(-c, vi, &mut w);
            }
        }
        let beta = norm2(&w);
        if j + 1 == k {
            break;
        }
        if beta <= 1e-14 * h.frobenius_norm().max(1e-300) {
            steps = j + 1;
            break;
        }
        h[(j + 1, j)] = Complex64::new(beta, 0.0);
        w.iter_mut().for_each(|e| *e /= S::from_real(beta));
        v.push(w);
    }
    let hk = DenseMatrix::from_fn(steps, |i, j| h[(i, j)]);
    let ev = dense_eigenvalues(&hk)?;
    Ok(ev.iter().map(|z| z.norm()).fold(0.0, f64::max))
}
