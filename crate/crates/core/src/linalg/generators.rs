//! Test matrices for the convergence experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{arnoldi_spectral_radius, power_iteration, LinalgError, SparseCSR};

/// Shift added on top of the spectral radius in [`random_mmatrix`].
pub const MMATRIX_SHIFT: f64 = 0.01;

/// Five-point Laplacian on a `k × k` grid, `A0 ⊗ I + I ⊗ A0` with
/// `A0 = tridiag(-1, 2, -1)`.
pub fn laplace2d(k: usize) -> SparseCSR<f64> {
    let m = k * k;
    let rows = (0..m).map(|r| {
        let (i, j) = (r / k, r % k);
        let mut row = vec![(r, 4.0)];
        if i > 0 {
            row.push((r - k, -1.0));
        }
        if i + 1 < k {
            row.push((r + k, -1.0));
        }
        if j > 0 {
            row.push((r - 1, -1.0));
        }
        if j + 1 < k {
            row.push((r + 1, -1.0));
        }
        row
    });
    SparseCSR::from_row_lists(m, rows.collect::<Vec<_>>())
}

/// Random sparse Z-matrix `B` with about `density · m²` off-diagonal entries
/// drawn uniformly from `(-1, 0)`, shifted to `B + (ρ(B) + shift) I`.
///
/// Positions are sampled uniformly; draws landing on the diagonal are
/// discarded and repeated positions are summed.
pub fn random_mmatrix(m: usize, density: f64, seed: u64, shift: f64) -> Result<SparseCSR<f64>, LinalgError> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(LinalgError::InvalidStructure(format!("density {density} outside (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws = (density * (m * m) as f64).round() as usize;
    let mut trip = Vec::with_capacity(draws);
    for _ in 0..draws {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..m);
        let v: f64 = rng.gen_range(0.0..1.0);
        if i != j && v > 0.0 {
            trip.push((i, j, -v));
        }
    }
    let b = SparseCSR::from_triplets(m, trip)?;
    let rho = spectral_radius_estimate(&b)?;
    Ok(b.shift(rho + shift))
}

fn spectral_radius_estimate(b: &SparseCSR<f64>) -> Result<f64, LinalgError> {
    if b.nnz() == 0 {
        return Ok(0.0);
    }
    match power_iteration(b, 20_000, 1e-8) {
        Ok((r, _)) => Ok(r),
        // periodic components give several eigenvalues of maximal modulus
        Err(LinalgError::NoConvergence { .. }) => arnoldi_spectral_radius(b, 200),
        Err(e) => Err(e),
    }
}
