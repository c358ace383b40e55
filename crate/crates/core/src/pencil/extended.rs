//! Determinant recursions in double-double complex arithmetic, used to
//! refine poles and residues beyond what the double recursion resolves.

use num_complex::Complex;
use twofloat::TwoFloat;

use super::PolyTridiag;
use crate::scalar::{Complex64, Scalar};

type Cdd = Complex<TwoFloat>;

fn cdd(z: Complex64) -> Cdd {
    Complex::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

fn round(z: Cdd) -> Complex64 {
    Complex64::new(z.re.hi() + z.re.lo(), z.im.hi() + z.im.lo())
}

fn zero() -> Cdd {
    cdd(Complex64::new(0.0, 0.0))
}

fn one() -> Cdd {
    cdd(Complex64::new(1.0, 0.0))
}

/// Entries of `T(z)` and `T'(z)` as `(sub, diag, sup)`.
struct Rows {
    t: [Vec<Cdd>; 3],
    dt: [Vec<Cdd>; 3],
}

fn rows<S: Scalar>(p: &PolyTridiag<S>, z: Cdd) -> Rows {
    let n1 = p.dim();
    let pick = |k: usize, len: usize| {
        let mut val = vec![zero(); len];
        let mut der = vec![zero(); len];
        for term in p.terms().iter().rev() {
            let coeffs = match k {
                0 => &term.sub,
                1 => &term.diag,
                _ => &term.sup,
            };
            for i in 0..len {
                // Horner for the value and its derivative
                der[i] = der[i] * z + val[i];
                val[i] = val[i] * z + cdd(coeffs[i].to_complex());
            }
        }
        (val, der)
    };
    let (s, ds) = pick(0, n1 - 1);
    let (d, dd) = pick(1, n1);
    let (u, du) = pick(2, n1 - 1);
    Rows { t: [s, d, u], dt: [ds, dd, du] }
}

/// `det T(z)` and `det T'(z)` of the rows and columns `from..`.
fn det_from(r: &Rows, from: usize) -> (Cdd, Cdd) {
    let [sub, diag, sup] = &r.t;
    let [dsub, ddiag, dsup] = &r.dt;
    let n1 = diag.len();
    if from >= n1 {
        return (one(), zero());
    }
    let (mut d2, mut d1) = (one(), diag[from]);
    let (mut e2, mut e1) = (zero(), ddiag[from]);
    for i in from + 1..n1 {
        let ag = sub[i - 1] * sup[i - 1];
        let dag = dsub[i - 1] * sup[i - 1] + sub[i - 1] * dsup[i - 1];
        let d = diag[i] * d1 - ag * d2;
        let e = ddiag[i] * d1 + diag[i] * e1 - dag * d2 - ag * e2;
        (d2, d1) = (d1, d);
        (e2, e1) = (e1, e);
    }
    (d1, e1)
}

/// Newton steps on `det T(z)` in extended precision, starting from a root
/// already accurate to double rounding of the determinant recursion.
pub(super) fn refine_root<S: Scalar>(p: &PolyTridiag<S>, z0: Complex64, max_step: f64) -> Complex64 {
    let mut z = cdd(z0);
    for _ in 0..3 {
        let (f, df) = det_from(&rows(p, z), 0);
        if round(df).norm() == 0.0 {
            break;
        }
        let step = f / df;
        let s = round(step);
        if !s.is_finite() || (round(z - step) - z0).norm() > max_step {
            break;
        }
        z -= step;
        if s.norm() <= 1e-30 * round(z).norm() {
            break;
        }
    }
    round(z)
}

/// `-q(τ) / p'(τ)` with `p = det T` and `q` the determinant of the trailing block.
pub(super) fn residue<S: Scalar>(p: &PolyTridiag<S>, tau: Complex64) -> Complex64 {
    let r = rows(p, cdd(tau));
    let (_, dp) = det_from(&r, 0);
    let (q, _) = det_from(&r, 1);
    round(-(q / dp))
}
