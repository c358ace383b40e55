//! The CF system read as a matrix equation `X T0ᵀ - A X T1ᵀ = v e_1ᵀ`.

use super::MatfunError;
use crate::linalg::SparseCSR;
use crate::pencil::TridiagPencil;
use crate::scalar::norm2;

#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterForm {
    /// Columns `x_0, ..., x_n` of `X`.
    pub columns: Vec<Vec<f64>>,
    /// `‖X T0ᵀ - A X T1ᵀ - v e_1ᵀ‖_F`.
    pub residual: f64,
}

pub fn sylvester_form(
    x: &[f64],
    pencil: &TridiagPencil<f64>,
    a: &SparseCSR<f64>,
    v: &[f64],
) -> Result<SylvesterForm, MatfunError> {
    let (n1, m) = (pencil.dim(), a.dim());
    if x.len() != n1 * m || v.len() != m {
        return Err(MatfunError::DimensionMismatch { expected: n1 * m, found: x.len() });
    }
    let columns: Vec<Vec<f64>> = x.chunks(m).map(<[f64]>::to_vec).collect();
    // column k of X Pᵀ is Σ_i P_{k,i} x_i
    let combine = |t: &crate::pencil::Tridiag<f64>, k: usize| {
        let mut out = vec![0.0; m];
        let lo = k.saturating_sub(1);
        for (i, col) in columns.iter().enumerate().take(k + 2).skip(lo) {
            let c = t.get(k, i);
            if c != 0.0 {
                crate::scalar::axpy(c, col, &mut out);
            }
        }
        out
    };
    let mut sq = 0.0;
    let mut ax = vec![0.0; m];
    for k in 0..n1 {
        let mut r = combine(pencil.t0(), k);
        a.mul_vec(&combine(pencil.t1(), k), &mut ax);
        r.iter_mut().zip(&ax).for_each(|(ri, &ai)| *ri -= ai);
        if k == 0 {
            r.iter_mut().zip(v).for_each(|(ri, &vi)| *ri -= vi);
        }
        sq += norm2(&r).powi(2);
    }
    Ok(SylvesterForm { columns, residual: sq.sqrt() })
}
