//! Spectra of the block splitting propagator against the propagators of the
//! shifted matrices `A - τ_i I`, one per pole of the pencil.

use super::MatfunError;
use crate::linalg::{arnoldi_spectral_radius, dense_eigenvalues, dense_eigenvector, DenseMatrix, LinalgError, SparseCSR};
use crate::pencil::TridiagPencil;
use crate::scalar::{norm2, Complex64};
use crate::solvers::{Splitting, SplittingPropagator};

/// Krylov dimension used for the propagator's spectral radius.
const RADIUS_KRYLOV: usize = 200;

/// `I - B^{-1} C` densely.
fn propagator<S: crate::Scalar>(b: &DenseMatrix<S>, c: &DenseMatrix<S>) -> Result<DenseMatrix<S>, LinalgError> {
    let n = b.dim();
    let lu = b.lu()?;
    let mut out = DenseMatrix::identity(n);
    let cols: Vec<Vec<S>> = (0..n).map(|j| lu.solve(&c.column(j))).collect();
    let sol = DenseMatrix::from_fn(n, |i, j| cols[j][i]);
    out = out.sub(&sol);
    Ok(out)
}

fn cf_matrix_dense(pencil: &TridiagPencil<f64>, a: &DenseMatrix<f64>) -> DenseMatrix<f64> {
    let eye = DenseMatrix::identity(a.dim());
    pencil.t0().to_dense().kron(&eye).sub(&pencil.t1().to_dense().kron(a))
}

/// `M_T = I - T(Ã)^{-1} T(A)` with `T(z) = T0 - z T1`, natural block ordering.
pub fn propagator_dense(
    pencil: &TridiagPencil<f64>,
    a: &DenseMatrix<f64>,
    a_tilde: &DenseMatrix<f64>,
) -> Result<DenseMatrix<f64>, MatfunError> {
    if a.dim() != a_tilde.dim() {
        return Err(MatfunError::DimensionMismatch { expected: a.dim(), found: a_tilde.dim() });
    }
    Ok(propagator(&cf_matrix_dense(pencil, a_tilde), &cf_matrix_dense(pencil, a))?)
}

/// `M(τ) = I - (Ã - τI)^{-1} (A - τI)`.
pub fn shifted_propagator_dense(
    a: &DenseMatrix<f64>,
    a_tilde: &DenseMatrix<f64>,
    tau: Complex64,
) -> Result<DenseMatrix<Complex64>, MatfunError> {
    if a.dim() != a_tilde.dim() {
        return Err(MatfunError::DimensionMismatch { expected: a.dim(), found: a_tilde.dim() });
    }
    let shift = DenseMatrix::identity(a.dim()).scale(tau);
    Ok(propagator(&a_tilde.to_complex().sub(&shift), &a.to_complex().sub(&shift))?)
}

/// Pairs two multisets greedily by ascending distance over all pairs and
/// returns the largest distance used, or `None` when the sizes differ.
pub fn match_spectra(left: &[Complex64], right: &[Complex64]) -> Option<f64> {
    if left.len() != right.len() {
        return None;
    }
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(left.len() * right.len());
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            pairs.push(((l - r).norm(), i, j));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (mut used_l, mut used_r) = (vec![false; left.len()], vec![false; right.len()]);
    let mut worst: f64 = 0.0;
    for (d, i, j) in pairs {
        if !used_l[i] && !used_r[j] {
            used_l[i] = true;
            used_r[j] = true;
            worst = worst.max(d);
        }
    }
    Some(worst)
}

#[derive(Clone, Debug)]
pub struct SpectrumComparison {
    /// Finite poles `τ_i` of the pencil.
    pub poles: Vec<Complex64>,
    /// Number of infinite eigenvalues of the pencil.
    pub infinite: usize,
    /// `ρ(M_T)` from Arnoldi on the matrix-free propagator.
    pub radius_propagator: f64,
    /// `ρ(M(τ_i))` per pole.
    pub pole_radii: Vec<f64>,
    /// Eigenvalues of `M_T`, when the dense cap allows.
    pub propagator_spectrum: Option<Vec<Complex64>>,
    /// `∪ spec(M(τ_i))` plus `m` zeros per infinite eigenvalue.
    pub union_spectrum: Option<Vec<Complex64>>,
    /// Largest distance in the greedy matching of the two spectra.
    pub matching_distance: Option<f64>,
}

impl SpectrumComparison {
    /// `max_i ρ(M(τ_i))`, with `0` contributed by infinite eigenvalues.
    pub fn radius_union(&self) -> f64 {
        self.pole_radii.iter().copied().fold(0.0, f64::max)
    }

    pub fn radius_gap(&self) -> f64 {
        (self.radius_propagator - self.radius_union()).abs()
    }
}

fn spectral_radius(ev: &[Complex64]) -> f64 {
    ev.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn smoother_spectrum_check(
    pencil: &TridiagPencil<f64>,
    a: &SparseCSR<f64>,
    split: Splitting,
) -> Result<SpectrumComparison, MatfunError> {
    let poles = pencil.poles()?;
    let m = a.dim();
    let a_tilde = split.approximation(a);
    let (ad, atd) = (a.to_dense(), a_tilde.to_dense());
    let poly = pencil.poly();
    let prop = SplittingPropagator::new(&poly, a, split)?;
    let radius_propagator = arnoldi_spectral_radius(&prop, RADIUS_KRYLOV)?;
    let mut pole_radii = Vec::with_capacity(poles.finite.len());
    let mut union = Vec::with_capacity(pencil.dim() * m);
    for &tau in &poles.finite {
        let ev = dense_eigenvalues(&shifted_propagator_dense(&ad, &atd, tau)?)?;
        pole_radii.push(spectral_radius(&ev));
        union.extend(ev);
    }
    union.extend(std::iter::repeat(Complex64::new(0.0, 0.0)).take(poles.infinite * m));
    let propagator_spectrum = match dense_eigenvalues(&propagator_dense(pencil, &ad, &atd)?) {
        Ok(ev) => Some(ev),
        Err(LinalgError::DimensionTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let union_spectrum = propagator_spectrum.as_ref().map(|_| union);
    let matching_distance = match (&propagator_spectrum, &union_spectrum) {
        (Some(l), Some(r)) => match_spectra(l, r),
        _ => None,
    };
    Ok(SpectrumComparison {
        poles: poles.finite,
        infinite: poles.infinite,
        radius_propagator,
        pole_radii,
        propagator_spectrum,
        union_spectrum,
        matching_distance,
    })
}

/// For each eigenpair `(λ, w)` of `M(τ_i)`, lifts `w` to `v ⊗ w` with `v`
/// spanning the kernel of `T(τ_i)` and returns the largest relative
/// residual `‖M_T (v⊗w) - λ (v⊗w)‖ / ‖v⊗w‖`.
pub fn eig_transport_check(
    pencil: &TridiagPencil<f64>,
    a: &DenseMatrix<f64>,
    a_tilde: &DenseMatrix<f64>,
    i: usize,
) -> Result<f64, MatfunError> {
    // the expansion rejects multiple poles
    let poles = pencil.pfe()?.poles;
    let tau = *poles
        .get(i)
        .ok_or_else(|| MatfunError::InvalidSpec(format!("pole index {i} out of range ({} finite poles)", poles.len())))?;
    let t_tau = pencil.t0().to_dense().to_complex().sub(&pencil.t1().to_dense().to_complex().scale(tau));
    let v = dense_eigenvector(&t_tau, Complex64::new(0.0, 0.0))?;
    let mt = propagator_dense(pencil, a, a_tilde)?.to_complex();
    let mtau = shifted_propagator_dense(a, a_tilde, tau)?;
    let mut worst: f64 = 0.0;
    for lambda in dense_eigenvalues(&mtau)? {
        let w = dense_eigenvector(&mtau, lambda)?;
        let x: Vec<Complex64> = v.iter().flat_map(|&vk| w.iter().map(move |&wj| vk * wj)).collect();
        let r: Vec<Complex64> = mt.matvec(&x).iter().zip(&x).map(|(&y, &xi)| y - lambda * xi).collect();
        worst = worst.max(norm2(&r) / norm2(&x));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confrac::exp_cfraction;

    #[test]
    fn match_spectra_pairs_globally() {
        let c = |x: f64| Complex64::new(x, 0.0);
        assert_eq!(match_spectra(&[c(0.0), c(1.0)], &[c(1.0), c(0.0)]), Some(0.0));
        assert!((match_spectra(&[c(0.0), c(0.2)], &[c(0.05), c(1.0)]).unwrap() - 0.8).abs() < 1e-15);
        assert_eq!(match_spectra(&[c(0.0)], &[]), None);
    }

    #[test]
    fn exact_splitting_has_zero_spectra() {
        let pencil = TridiagPencil::from_contracted(&exp_cfraction::<f64>(4)).unwrap();
        let a = SparseCSR::diagonal(&[1.0, 2.0, 3.0]);
        let cmp = smoother_spectrum_check(&pencil, &a, Splitting::Jacobi).unwrap();
        assert!(cmp.radius_propagator < 1e-12);
        assert!(cmp.radius_union() < 1e-12);
        assert!(cmp.matching_distance.unwrap() < 1e-10);
    }
}
