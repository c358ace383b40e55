//! The block-tridiagonal CF-matrix `T(A) = Σ_j T^(j) ⊗ A^j`.

use super::{LinalgError, LinearOperator, SparseCSR};
use crate::pencil::PolyTridiag;
use crate::scalar::Scalar;

/// `T(A)` applied block by block; vectors are ordered block index outer,
/// grid index inner.
#[derive(Clone, Debug)]
pub struct CFOperator<'a, S> {
    pencil: PolyTridiag<S>,
    a: &'a SparseCSR<S>,
}

impl<'a, S: Scalar> CFOperator<'a, S> {
    pub fn new(pencil: PolyTridiag<S>, a: &'a SparseCSR<S>) -> Self {
        Self { pencil, a }
    }

    pub fn pencil(&self) -> &PolyTridiag<S> {
        &self.pencil
    }

    pub fn matrix(&self) -> &SparseCSR<S> {
        self.a
    }

    /// Number of blocks `n + 1`.
    pub fn blocks(&self) -> usize {
        self.pencil.dim()
    }

    /// Block size `m`.
    pub fn block_size(&self) -> usize {
        self.a.dim()
    }

    pub fn try_apply(&self, x: &[S], y: &mut [S]) -> Result<(), LinalgError> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, found: x.len().min(y.len()) });
        }
        self.apply_unchecked(x, y);
        Ok(())
    }

    fn apply_unchecked(&self, x: &[S], y: &mut [S]) {
        let (nb, m) = (self.blocks(), self.block_size());
        y.iter_mut().for_each(|v| *v = S::zero());
        let mut power = x.to_vec();
        let mut next = vec![S::zero(); x.len()];
        for (j, t) in self.pencil.terms().iter().enumerate() {
            if j > 0 {
                for k in 0..nb {
                    self.a.mul_vec(&power[k * m..(k + 1) * m], &mut next[k * m..(k + 1) * m]);
                }
                std::mem::swap(&mut power, &mut next);
            }
            if t.is_zero() {
                continue;
            }
            for i in 0..nb {
                let yi = &mut y[i * m..(i + 1) * m];
                for k in i.saturating_sub(1)..(i + 2).min(nb) {
                    let c = t.get(i, k);
                    if !c.is_zero() {
                        crate::scalar::axpy(c, &power[k * m..(k + 1) * m], yi);
                    }
                }
            }
        }
    }

    /// Explicit CSR form. Powers beyond `A²` would fill in too much and are refused.
    pub fn assemble(&self) -> Result<SparseCSR<S>, LinalgError> {
        let l = self.pencil.degree();
        if l > 2 {
            return Err(LinalgError::InvalidStructure(format!("assembly supports ℓ ≤ 2, got {l}")));
        }
        let (nb, m) = (self.blocks(), self.block_size());
        let mut powers = vec![SparseCSR::identity(m), self.a.clone()];
        if l == 2 {
            powers.push(self.a.matmul(self.a)?);
        }
        let terms = self.pencil.terms();
        let rows = (0..nb * m).map(|row| {
            let (i, r) = (row / m, row % m);
            let mut entries = Vec::new();
            for k in i.saturating_sub(1)..(i + 2).min(nb) {
                for (j, t) in terms.iter().enumerate() {
                    let c = t.get(i, k);
                    if c.is_zero() {
                        continue;
                    }
                    let (cols, vals) = powers[j].row(r);
                    entries.extend(cols.iter().zip(vals).map(|(&col, &v)| (k * m + col, c * v)));
                }
            }
            entries
        });
        Ok(SparseCSR::from_row_lists(nb * m, rows.collect::<Vec<_>>()))
    }
}

impl<S: Scalar> LinearOperator<S> for CFOperator<'_, S> {
    fn dim(&self) -> usize {
        self.blocks() * self.block_size()
    }

    fn apply(&self, x: &[S], y: &mut [S]) {
        assert_eq!(x.len(), self.dim(), "operand length");
        self.apply_unchecked(x, y)
    }
}
