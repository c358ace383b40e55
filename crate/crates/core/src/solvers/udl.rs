//! Block UDL elimination of a small CF-matrix with dense blocks.

use super::SolverError;
use crate::linalg::DenseMatrix;
use crate::pencil::PolyTridiag;
use crate::scalar::Scalar;

/// Solution of `T(A) x = e_1 ⊗ v` together with the block Schur complements.
#[derive(Clone, Debug)]
pub struct UdlSolution<S> {
    /// Blocks `x_0, ..., x_n`.
    pub blocks: Vec<Vec<S>>,
    /// `Σ_0, ..., Σ_n` from the backward recursion.
    pub sigmas: Vec<DenseMatrix<S>>,
}

/// Dense block `T_{ik}(A) = Σ_j T^(j)_{ik} A^j`.
fn block<S: Scalar>(p: &PolyTridiag<S>, powers: &[DenseMatrix<S>], i: usize, k: usize) -> DenseMatrix<S> {
    let m = powers[0].dim();
    let mut out = DenseMatrix::zeros(m);
    for (t, pw) in p.terms().iter().zip(powers) {
        let c = t.get(i, k);
        if !c.is_zero() {
            out = out.add(&pw.scale(c));
        }
    }
    out
}

/// `Σ_n = T_{nn}`, `Σ_i = T_{ii} - T_{i,i+1} Σ_{i+1}^{-1} T_{i+1,i}`, followed by
/// the substitutions with `U`, `D` and `L`. Intended for small dense `A`.
pub fn block_udl_solve<S: Scalar>(p: &PolyTridiag<S>, a: &DenseMatrix<S>, v: &[S]) -> Result<UdlSolution<S>, SolverError> {
    let m = a.dim();
    if v.len() != m {
        return Err(SolverError::DimensionMismatch { expected: m, found: v.len() });
    }
    let nb = p.dim();
    let mut powers = vec![DenseMatrix::identity(m)];
    for _ in 0..p.degree() {
        let next = powers.last().unwrap().matmul(a);
        powers.push(next);
    }
    let mut sigmas = vec![DenseMatrix::zeros(m); nb];
    let mut lus = Vec::with_capacity(nb);
    sigmas[nb - 1] = block(p, &powers, nb - 1, nb - 1);
    lus.push(sigmas[nb - 1].lu().map_err(|_| SolverError::SingularSchurComplement { level: nb - 1 })?);
    for i in (0..nb - 1).rev() {
        let upper = block(p, &powers, i, i + 1);
        let lower = block(p, &powers, i + 1, i);
        let lu_next = lus.last().unwrap();
        // Σ_{i+1}^{-1} T_{i+1,i}, column by column
        let mut sol = DenseMatrix::zeros(m);
        for j in 0..m {
            let col = lu_next.solve(&lower.column(j));
            for r in 0..m {
                sol[(r, j)] = col[r];
            }
        }
        sigmas[i] = block(p, &powers, i, i).sub(&upper.matmul(&sol));
        lus.push(sigmas[i].lu().map_err(|_| SolverError::SingularSchurComplement { level: i })?);
    }
    lus.reverse();
    // U w = e_1 ⊗ v leaves w = e_1 ⊗ v; D z = w gives z_0 = Σ_0^{-1} v
    let mut blocks = vec![lus[0].solve(v)];
    for i in 1..nb {
        let rhs = block(p, &powers, i, i - 1).matvec(&blocks[i - 1]);
        let xi: Vec<S> = lus[i].solve(&rhs).into_iter().map(|e| -e).collect();
        blocks.push(xi);
    }
    Ok(UdlSolution { blocks, sigmas })
}
