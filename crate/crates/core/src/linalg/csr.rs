//! Compressed sparse row storage for square matrices.

use super::{LinalgError, LinearOperator};
use crate::scalar::{Complex64, Scalar};

/// Square CSR matrix with sorted, duplicate-free column indices and no
/// stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseCSR<S> {
    dim: usize,
    row_offsets: Vec<usize>,
    column_indices: Vec<usize>,
    values: Vec<S>,
}

impl<S: Scalar> SparseCSR<S> {
    /// Builds from raw arrays, checking every structural invariant.
    pub fn try_from_raw(
        dim: usize,
        row_offsets: Vec<usize>,
        column_indices: Vec<usize>,
        values: Vec<S>,
    ) -> Result<Self, LinalgError> {
        let bad = |msg: &str| Err(LinalgError::InvalidStructure(msg.to_string()));
        if row_offsets.len() != dim + 1 || row_offsets[0] != 0 {
            return bad("row offsets must have dim + 1 entries starting at 0");
        }
        if row_offsets.windows(2).any(|w| w[0] > w[1]) {
            return bad("row offsets must be monotone");
        }
        if row_offsets[dim] != column_indices.len() || column_indices.len() != values.len() {
            return bad("offset, index and value lengths disagree");
        }
        for i in 0..dim {
            let cols = &column_indices[row_offsets[i]..row_offsets[i + 1]];
            if cols.windows(2).any(|w| w[0] >= w[1]) || cols.last().is_some_and(|&c| c >= dim) {
                return bad("column indices must be strictly increasing and in range");
            }
        }
        if values.iter().any(|v| v.is_zero()) {
            return bad("explicit zeros are not stored");
        }
        Ok(Self { dim, row_offsets, column_indices, values })
    }

    /// Skips validation; explicit zeros may be present (used for factors whose
    /// pattern must not change).
    pub(crate) fn from_raw_unchecked(dim: usize, row_offsets: Vec<usize>, column_indices: Vec<usize>, values: Vec<S>) -> Self {
        Self { dim, row_offsets, column_indices, values }
    }

    /// Sums duplicates and drops entries that end up exactly zero.
    pub fn from_triplets(dim: usize, mut triplets: Vec<(usize, usize, S)>) -> Result<Self, LinalgError> {
        if let Some(&(i, j, _)) = triplets.iter().find(|t| t.0 >= dim || t.1 >= dim) {
            return Err(LinalgError::IndexOutOfBounds { row: i, col: j, dim });
        }
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut row_offsets = vec![0usize; dim + 1];
        let mut column_indices = Vec::with_capacity(triplets.len());
        let mut values: Vec<S> = Vec::with_capacity(triplets.len());
        let mut rows = Vec::with_capacity(triplets.len());
        for (i, j, v) in triplets {
            if rows.last() == Some(&i) && column_indices.last() == Some(&j) {
                *values.last_mut().unwrap() += v;
            } else {
                rows.push(i);
                column_indices.push(j);
                values.push(v);
            }
        }
        let mut k = 0;
        for idx in 0..values.len() {
            if !values[idx].is_zero() {
                rows[k] = rows[idx];
                column_indices[k] = column_indices[idx];
                values[k] = values[idx];
                k += 1;
            }
        }
        rows.truncate(k);
        column_indices.truncate(k);
        values.truncate(k);
        for &r in &rows {
            row_offsets[r + 1] += 1;
        }
        for i in 0..dim {
            row_offsets[i + 1] += row_offsets[i];
        }
        Ok(Self { dim, row_offsets, column_indices, values })
    }

    /// Assembles row by row from `(column, value)` lists that may be unsorted
    /// and contain duplicates.
    pub(crate) fn from_row_lists<I>(dim: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<(usize, S)>>,
    {
        let mut row_offsets = Vec::with_capacity(dim + 1);
        row_offsets.push(0);
        let mut column_indices = Vec::new();
        let mut values = Vec::new();
        for mut row in rows {
            row.sort_by_key(|e| e.0);
            let start = column_indices.len();
            for (c, v) in row {
                if column_indices.len() > start && column_indices.last() == Some(&c) {
                    *values.last_mut().unwrap() += v;
                } else {
                    column_indices.push(c);
                    values.push(v);
                }
            }
            // compact away exact zeros in this row
            let mut k = start;
            for idx in start..values.len() {
                if !values[idx].is_zero() {
                    column_indices[k] = column_indices[idx];
                    values[k] = values[idx];
                    k += 1;
                }
            }
            column_indices.truncate(k);
            values.truncate(k);
            row_offsets.push(column_indices.len());
        }
        assert_eq!(row_offsets.len(), dim + 1, "row count mismatch");
        Self { dim, row_offsets, column_indices, values }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![S::one(); dim])
    }

    pub fn diagonal(d: &[S]) -> Self {
        Self::from_row_lists(d.len(), d.iter().enumerate().map(|(i, &v)| vec![(i, v)]))
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, row_offsets: vec![0; dim + 1], column_indices: vec![], values: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn column_indices(&self) -> &[usize] {
        &self.column_indices
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[S]) {
        let r = self.row_offsets[i]..self.row_offsets[i + 1];
        (&self.column_indices[r.clone()], &self.values[r])
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        let (cols, vals) = self.row(i);
        cols.binary_search(&j).map(|k| vals[k]).unwrap_or_else(|_| S::zero())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, S)> + '_ {
        (0..self.dim).flat_map(move |i| {
            let (cols, vals) = self.row(i);
            cols.iter().zip(vals).map(move |(&j, &v)| (i, j, v))
        })
    }

    pub fn mul_vec(&self, x: &[S], y: &mut [S]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let (cols, vals) = self.row(i);
            let mut acc = S::zero();
            for (&c, &v) in cols.iter().zip(vals) {
                acc += v * x[c];
            }
            *yi = acc;
        }
    }

    pub fn diagonal_values(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    /// Lower triangle including the diagonal.
    pub fn lower_triangle(&self) -> Self {
        self.filter(|i, j| j <= i)
    }

    pub fn diagonal_part(&self) -> Self {
        self.filter(|i, j| i == j)
    }

    fn filter(&self, keep: impl Fn(usize, usize) -> bool) -> Self {
        Self::from_row_lists(
            self.dim,
            (0..self.dim).map(|i| {
                let (cols, vals) = self.row(i);
                cols.iter().zip(vals).filter(|(&j, _)| keep(i, j)).map(|(&j, &v)| (j, v)).collect()
            }),
        )
    }

    pub fn transpose(&self) -> Self {
        let mut t: Vec<_> = self.triplets().map(|(i, j, v)| (j, i, v)).collect();
        t.sort_by_key(|e| (e.0, e.1));
        Self::from_triplets(self.dim, t).expect("indices stay in range")
    }

    pub fn is_symmetric(&self) -> bool {
        self.triplets().all(|(i, j, v)| self.get(j, i) == v)
    }

    pub fn scale(&self, s: S) -> Self {
        let mut out = self.clone();
        out.values.iter_mut().for_each(|v| *v *= s);
        out.values.retain(|v| !v.is_zero());
        if out.values.len() != self.values.len() {
            return Self::from_triplets(self.dim, self.triplets().map(|(i, j, v)| (i, j, v * s)).collect())
                .expect("indices stay in range");
        }
        out
    }

    /// `self + s I`.
    pub fn shift(&self, s: S) -> Self {
        Self::from_row_lists(
            self.dim,
            (0..self.dim).map(|i| {
                let (cols, vals) = self.row(i);
                let mut row: Vec<_> = cols.iter().copied().zip(vals.iter().copied()).collect();
                row.push((i, s));
                row
            }),
        )
    }

    /// Sparse product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.dim != rhs.dim {
            return Err(LinalgError::DimensionMismatch { expected: self.dim, found: rhs.dim });
        }
        let mut acc = vec![S::zero(); self.dim];
        let mut mark = vec![usize::MAX; self.dim];
        let rows = (0..self.dim).map(|i| {
            let mut touched = Vec::new();
            let (cols, vals) = self.row(i);
            for (&k, &a) in cols.iter().zip(vals) {
                let (rc, rv) = rhs.row(k);
                for (&j, &b) in rc.iter().zip(rv) {
                    if mark[j] != i {
                        mark[j] = i;
                        acc[j] = S::zero();
                        touched.push(j);
                    }
                    acc[j] += a * b;
                }
            }
            touched.into_iter().map(|j| (j, acc[j])).collect::<Vec<_>>()
        });
        let rows: Vec<_> = rows.collect();
        Ok(Self::from_row_lists(self.dim, rows))
    }

    /// `P A P^T` for the index map `perm` (old index to new index).
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0usize; self.dim];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        Self::from_row_lists(
            self.dim,
            (0..self.dim).map(|new_i| {
                let (cols, vals) = self.row(inv[new_i]);
                cols.iter().zip(vals).map(|(&j, &v)| (perm[j], v)).collect()
            }),
        )
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> SparseCSR<T> {
        SparseCSR::from_row_lists(
            self.dim,
            (0..self.dim).map(|i| {
                let (cols, vals) = self.row(i);
                cols.iter().zip(vals).map(|(&j, &v)| (j, f(v))).collect()
            }),
        )
    }

    pub fn to_complex(&self) -> SparseCSR<Complex64> {
        self.map(Scalar::to_complex)
    }

    pub fn to_dense(&self) -> super::DenseMatrix<S> {
        let mut d = super::DenseMatrix::zeros(self.dim);
        for (i, j, v) in self.triplets() {
            d[(i, j)] = v;
        }
        d
    }

    pub fn from_dense(m: &super::DenseMatrix<S>) -> Self {
        let n = m.dim();
        Self::from_row_lists(n, (0..n).map(|i| (0..n).map(|j| (j, m[(i, j)])).collect()))
    }
}

impl<S: Scalar> LinearOperator<S> for SparseCSR<S> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn apply(&self, x: &[S], y: &mut [S]) {
        self.mul_vec(x, y)
    }
}
