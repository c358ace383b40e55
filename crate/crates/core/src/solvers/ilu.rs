//! Zero-fill incomplete LU and the preconditioner wrapper.

use super::SolverError;
use crate::linalg::SparseCSR;
use crate::scalar::Scalar;

/// ILU(0) factors stored on the pattern of the input: strictly lower part
/// holds `L` (unit diagonal implied), the rest holds `U`.
#[derive(Clone, Debug)]
pub struct Ilu0<S> {
    lu: SparseCSR<S>,
    diag_pos: Vec<usize>,
}

impl<S: Scalar> Ilu0<S> {
    pub fn new(a: &SparseCSR<S>) -> Result<Self, SolverError> {
        let n = a.dim();
        let offsets = a.row_offsets().to_vec();
        let cols = a.column_indices().to_vec();
        let mut vals = a.values().to_vec();
        let mut diag_pos = vec![usize::MAX; n];
        for i in 0..n {
            if let Ok(k) = cols[offsets[i]..offsets[i + 1]].binary_search(&i) {
                diag_pos[i] = offsets[i] + k;
            } else {
                return Err(SolverError::ZeroPivot { row: i });
            }
        }
        let mut pos = vec![usize::MAX; n];
        for i in 0..n {
            let row = offsets[i]..offsets[i + 1];
            for p in row.clone() {
                pos[cols[p]] = p;
            }
            for p in offsets[i]..diag_pos[i] {
                let k = cols[p];
                let pivot = vals[diag_pos[k]];
                if pivot.is_zero() {
                    return Err(SolverError::ZeroPivot { row: k });
                }
                let l = vals[p] / pivot;
                vals[p] = l;
                for q in diag_pos[k] + 1..offsets[k + 1] {
                    let target = pos[cols[q]];
                    if target != usize::MAX {
                        let u = vals[q];
                        vals[target] -= l * u;
                    }
                }
            }
            for p in row {
                pos[cols[p]] = usize::MAX;
            }
            if vals[diag_pos[i]].is_zero() {
                return Err(SolverError::ZeroPivot { row: i });
            }
        }
        // values may have cancelled to zero; keep them so the pattern stays fixed
        let lu = SparseCSR::from_raw_unchecked(n, offsets, cols, vals);
        Ok(Self { lu, diag_pos })
    }

    /// `z = (LU)^{-1} r`.
    pub fn solve(&self, r: &[S], z: &mut [S]) {
        let n = self.lu.dim();
        let (offsets, cols, vals) = (self.lu.row_offsets(), self.lu.column_indices(), self.lu.values());
        for i in 0..n {
            let mut acc = r[i];
            for p in offsets[i]..self.diag_pos[i] {
                acc -= vals[p] * z[cols[p]];
            }
            z[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = z[i];
            for p in self.diag_pos[i] + 1..offsets[i + 1] {
                acc -= vals[p] * z[cols[p]];
            }
            z[i] = acc / vals[self.diag_pos[i]];
        }
    }
}

type CustomApply<S> = Box<dyn Fn(&[S], &mut [S]) + Send + Sync>;

/// Fixed linear map `M^{-1}` used for left preconditioning.
pub enum Preconditioner<S> {
    None,
    Ilu0(Ilu0<S>),
    Custom(CustomApply<S>),
}

impl<S: Scalar> Preconditioner<S> {
    pub fn ilu0(a: &SparseCSR<S>) -> Result<Self, SolverError> {
        Ok(Self::Ilu0(Ilu0::new(a)?))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, Self::None)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::None => "none",
            Self::Ilu0(_) => "ilu0",
            Self::Custom(_) => "custom",
        }
    }

    pub fn apply(&self, r: &[S], z: &mut [S]) {
        match self {
            Self::None => z.copy_from_slice(r),
            Self::Ilu0(f) => f.solve(r, z),
            Self::Custom(f) => f(r, z),
        }
    }
}

impl<S> std::fmt::Debug for Preconditioner<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::None => "Preconditioner::None",
            Self::Ilu0(_) => "Preconditioner::Ilu0",
            Self::Custom(_) => "Preconditioner::Custom",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_triangular_and_tridiagonal() {
        let lower = SparseCSR::from_triplets(3, vec![(0, 0, 2.0), (1, 0, 1.0), (1, 1, 3.0), (2, 1, -1.0), (2, 2, 4.0)]).unwrap();
        let tri = crate::linalg::laplace2d(1).shift(0.0);
        for a in [lower, tri, SparseCSR::from_triplets(3, vec![
            (0, 0, 4.0), (0, 1, 1.0), (1, 0, 2.0), (1, 1, 5.0), (1, 2, 1.0), (2, 1, 3.0), (2, 2, 6.0),
        ]).unwrap()] {
            let f = Ilu0::new(&a).unwrap();
            let x = vec![1.0, -2.0, 0.5][..a.dim()].to_vec();
            let mut y = vec![0.0; a.dim()];
            let mut z = vec![0.0; a.dim()];
            a.mul_vec(&x, &mut y);
            f.solve(&y, &mut z);
            for (p, q) in z.iter().zip(&x) {
                assert!((p - q).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn zero_pivot_reported() {
        let a = SparseCSR::from_triplets(2, vec![(0, 1, 1.0), (1, 0, 1.0), (1, 1, 1.0)]).unwrap();
        assert!(matches!(Ilu0::new(&a), Err(SolverError::ZeroPivot { row: 0 })));
    }
}
