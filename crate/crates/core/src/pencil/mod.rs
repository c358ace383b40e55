//! Tridiagonal pencils `T(z) = T0 - z T1` built from continued fractions,
//! their poles and the simple-pole partial fraction expansion of
//! `(T(z)^{-1})_{1,1}`.

mod extended;
mod io;
mod tridiag;

pub use io::{format_pencil, parse_pencil};
pub use tridiag::{PolyTridiag, Tridiag};

use thiserror::Error;

use crate::confrac::{CfError, ContinuedFraction, Polynomial};
use crate::linalg::{polynomial_roots, LinalgError};
use crate::scalar::{Complex64, Scalar};

/// Relative distance below which two poles count as one multiple pole.
pub const POLE_SEPARATION: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PencilError {
    #[error("level {level} does not have regular C-fraction shape")]
    NotACFraction { level: usize },
    #[error("contraction needs an even number of levels, got {available}")]
    LengthTooShort { needed: usize, available: usize },
    #[error("level {level}: {reason}")]
    ShapeViolation { level: usize, reason: String },
    #[error("T(z) is singular at z = {z}")]
    SingularAtZ { z: Complex64 },
    #[error("pencil is singular for every z")]
    IrregularPencil,
    #[error("poles {i} and {j} coincide to within the separation tolerance")]
    MultiplePoleDetected { i: usize, j: usize },
    #[error("(T(z)^-1)_11 has a polynomial part of degree {degree}")]
    NonConstantPolynomialPart { degree: usize },
    #[error("invalid scaling factor at index {index}")]
    InvalidScaling { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl From<CfError> for PencilError {
    fn from(e: CfError) -> Self {
        match e {
            CfError::NotACFraction { level } => PencilError::NotACFraction { level },
            other => PencilError::ShapeViolation { level: 0, reason: other.to_string() },
        }
    }
}

/// Linear pencil `T(z) = T0 - z T1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagPencil<S> {
    t0: Tridiag<S>,
    t1: Tridiag<S>,
    regular: bool,
}

/// Finite generalized eigenvalues plus the number of infinite ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Poles {
    pub finite: Vec<Complex64>,
    pub infinite: usize,
}

/// `r(z) = Σ_j ω_j / (τ_j - z) + σ`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractionExpansion {
    pub poles: Vec<Complex64>,
    pub weights: Vec<Complex64>,
    pub constant: Complex64,
}

impl PartialFractionExpansion {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.poles.iter().zip(&self.weights).map(|(&t, &w)| w / (t - z)).sum::<Complex64>() + self.constant
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// All poles real (exactly zero imaginary part).
    pub fn is_real(&self) -> bool {
        self.poles.iter().chain(&self.weights).chain([&self.constant]).all(|z| z.im == 0.0)
    }
}

impl<S: Scalar> TridiagPencil<S> {
    pub fn new(t0: Tridiag<S>, t1: Tridiag<S>) -> Result<Self, PencilError> {
        if t0.dim() != t1.dim() {
            return Err(PencilError::DimensionMismatch { expected: t0.dim(), found: t1.dim() });
        }
        let mut p = Self { t0, t1, regular: false };
        p.regular = p.poly().is_regular();
        Ok(p)
    }

    /// `T0 = diag(b0, 1, ..., 1)` with unit superdiagonal, `T1` carrying
    /// `c_1, ..., c_n` on the subdiagonal.
    pub fn from_cfraction(cf: &ContinuedFraction<S>) -> Result<Self, PencilError> {
        let (b0, c) = cf.as_c_fraction()?;
        let n1 = c.len() + 1;
        let mut diag = vec![S::one(); n1];
        diag[0] = b0;
        let t0 = Tridiag { sub: vec![S::zero(); n1 - 1], diag, sup: vec![S::one(); n1 - 1] };
        let t1 = Tridiag { sub: c, diag: vec![S::zero(); n1], sup: vec![S::zero(); n1 - 1] };
        Self::new(t0, t1)
    }

    /// Pencil of size `n + 1` for the contracted form of a regular C-fraction
    /// with `2n` levels; `(T(z)^{-1})_{1,1} = 1 / g_{2n}(z)`.
    pub fn from_contracted(cf: &ContinuedFraction<S>) -> Result<Self, PencilError> {
        let (b0, c) = cf.as_c_fraction()?;
        if c.len() % 2 == 1 {
            return Err(PencilError::LengthTooShort { needed: c.len() + 1, available: c.len() });
        }
        let n = c.len() / 2;
        let ci = |i: usize| c[i - 1];
        let mut d0 = vec![S::one(); n + 1];
        d0[0] = b0;
        let mut sup0 = vec![S::zero(); n];
        if n > 0 {
            sup0[0] = -S::one();
        }
        let t0 = Tridiag { sub: vec![S::zero(); n], diag: d0, sup: sup0 };
        // T1 = -M with M row 1 = (c1, c2, c2) and row i = (c_{2i-1}, c_{2i-1} + c_{2i}, c_{2i})
        let mut sub1 = vec![S::zero(); n];
        let mut diag1 = vec![S::zero(); n + 1];
        let mut sup1 = vec![S::zero(); n];
        for i in 1..=n {
            sub1[i - 1] = -ci(2 * i - 1);
            diag1[i] = if i == 1 { -ci(2) } else { -(ci(2 * i - 1) + ci(2 * i)) };
            if i < n {
                sup1[i] = -ci(2 * i);
            }
        }
        Self::new(t0, Tridiag { sub: sub1, diag: diag1, sup: sup1 })
    }

    /// Pencil for a continued fraction with unit partial numerators and
    /// `b_i(z) = b_i^(0) - b_i^(1) z`: `T0` has diagonal `b^(0)`, `-1` above
    /// and `1` below the diagonal, `T1 = diag(b^(1))`. With `symmetric` the
    /// sign scalings `D_L = diag((-1)^⌊i/2⌋)`, `D_R = diag((-1)^⌊(i+1)/2⌋)`
    /// are applied, making both matrices symmetric.
    pub fn from_longdiv(cf: &ContinuedFraction<S>, symmetric: bool) -> Result<Self, PencilError> {
        let n1 = cf.len() + 1;
        for i in 1..n1 {
            if *cf.c(i) != Polynomial::one() {
                return Err(PencilError::ShapeViolation { level: i, reason: "partial numerator is not 1".into() });
            }
        }
        let bs = cf.partial_denominators();
        if let Some(level) = bs.iter().position(|b| b.degree() > 1) {
            return Err(PencilError::ShapeViolation { level, reason: "partial denominator has degree > 1".into() });
        }
        let t0 = Tridiag {
            sub: vec![S::one(); n1 - 1],
            diag: bs.iter().map(|b| b.coeff(0)).collect(),
            sup: vec![-S::one(); n1 - 1],
        };
        let t1 = Tridiag::diagonal(bs.iter().map(|b| -b.coeff(1)).collect());
        if !symmetric {
            return Self::new(t0, t1);
        }
        let sign = |k: usize| if k % 2 == 0 { S::one() } else { -S::one() };
        let dl: Vec<S> = (0..n1).map(|i| sign(i / 2)).collect();
        let dr: Vec<S> = (0..n1).map(|i| sign(i.div_ceil(2))).collect();
        Self::new(t0.two_sided(&dl, &dr), t1.two_sided(&dl, &dr))
    }

    pub fn t0(&self) -> &Tridiag<S> {
        &self.t0
    }

    pub fn t1(&self) -> &Tridiag<S> {
        &self.t1
    }

    pub fn dim(&self) -> usize {
        self.t0.dim()
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    /// The family `T(z) = T0 + (-T1) z`.
    pub fn poly(&self) -> PolyTridiag<S> {
        PolyTridiag::new(vec![self.t0.clone(), self.t1.scale(-S::one())]).expect("equal dimensions")
    }

    pub fn eval(&self, z: S) -> Tridiag<S> {
        self.t0.add_scaled(-z, &self.t1)
    }

    pub fn entry11_inverse(&self, z: S) -> Result<S, PencilError> {
        self.poly().entry11_inverse(z)
    }

    /// `T_new(z) = T(z - s)`, i.e. `(T0 + s T1, T1)`; poles move by `+s`.
    pub fn shift_variable(&self, s: S) -> Self {
        Self { t0: self.t0.add_scaled(s, &self.t1), t1: self.t1.clone(), regular: self.regular }
    }

    /// `D T^(j) D` with `D = diag(d)`, `d_0 = 1`.
    pub fn scale(&self, d: &[S]) -> Result<Self, PencilError> {
        if d.len() != self.dim() {
            return Err(PencilError::InvalidScaling { index: d.len().min(self.dim()) });
        }
        if d[0] != S::one() {
            return Err(PencilError::InvalidScaling { index: 0 });
        }
        if let Some(index) = d.iter().position(|v| v.is_zero()) {
            return Err(PencilError::InvalidScaling { index });
        }
        Ok(Self { t0: self.t0.congruence(d), t1: self.t1.congruence(d), regular: self.regular })
    }

    /// Finite generalized eigenvalues (roots of `det T(z)`) and the count of
    /// infinite ones.
    pub fn poles(&self) -> Result<Poles, PencilError> {
        if !self.regular {
            return Err(PencilError::IrregularPencil);
        }
        let poly = self.poly();
        let det = poly.det_polynomial();
        let finite = polished_roots(&poly, &det)?;
        Ok(Poles { infinite: self.dim() - finite.len(), finite })
    }

    /// Simple-pole partial fraction expansion of `(T(z)^{-1})_{1,1}`.
    pub fn pfe(&self) -> Result<PartialFractionExpansion, PencilError> {
        let poles = self.poles()?.finite;
        let max = poles.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for i in 0..poles.len() {
            for j in i + 1..poles.len() {
                if (poles[i] - poles[j]).norm() < POLE_SEPARATION * max {
                    return Err(PencilError::MultiplePoleDetected { i, j });
                }
            }
        }
        let poly = self.poly();
        let weights = poles.iter().map(|&tau| extended::residue(&poly, tau)).collect();
        let p = poly.det_polynomial();
        let q = poly.trailing().map_or_else(Polynomial::one, |t| t.det_polynomial());
        let constant = if q.is_zero() || q.degree() < p.degree() {
            Complex64::new(0.0, 0.0)
        } else if q.degree() == p.degree() {
            (q.leading() / p.leading()).to_complex()
        } else {
            return Err(PencilError::NonConstantPolynomialPart { degree: q.degree() - p.degree() });
        };
        Ok(PartialFractionExpansion { poles, weights, constant })
    }
}

/// Companion-matrix roots of `det`, refined by Newton steps on the minors
/// recursion of the pencil itself. Conjugate pairs stay exact pairs for real
/// pencils; the result is sorted by real then imaginary part.
fn polished_roots<S: Scalar>(poly: &PolyTridiag<S>, det: &Polynomial<S>) -> Result<Vec<Complex64>, PencilError> {
    let raw = polynomial_roots(det)?;
    let cpoly = poly.to_complex();
    let mut roots = Vec::with_capacity(raw.len());
    for (k, &z) in raw.iter().enumerate() {
        if !S::IS_COMPLEX && z.im < 0.0 {
            continue;
        }
        let gap = raw
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, w)| (w - z).norm())
            .fold(f64::INFINITY, f64::min);
        let r = newton_polish(&cpoly, z, 0.25 * gap);
        let r = extended::refine_root(poly, r, 0.25 * gap);
        let r = if !S::IS_COMPLEX && z.im == 0.0 { Complex64::new(r.re, 0.0) } else { r };
        roots.push(r);
        if !S::IS_COMPLEX && z.im > 0.0 {
            roots.push(r.conj());
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn newton_polish(p: &PolyTridiag<Complex64>, mut z: Complex64, max_step: f64) -> Complex64 {
    let start = z;
    let (mut f, mut df) = p.det_and_derivative(z);
    for _ in 0..4 {
        if f.norm() == 0.0 || df.norm() == 0.0 {
            break;
        }
        let cand = z - f / df;
        if (cand - start).norm() > max_step || !cand.is_finite() {
            break;
        }
        let (fc, dfc) = p.det_and_derivative(cand);
        if fc.norm() >= f.norm() {
            break;
        }
        (z, f, df) = (cand, fc, dfc);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confrac::exp_cfraction;

    #[test]
    fn cfraction_pencil_layout() {
        let p = TridiagPencil::from_cfraction(&exp_cfraction::<f64>(2)).unwrap();
        assert_eq!(p.t0().to_dense().data(), &[1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0]);
        assert_eq!(p.t1().sub, vec![1.0, -0.5]);
        assert!(p.t1().diag.iter().chain(&p.t1().sup).all(|&v| v == 0.0));
    }

    #[test]
    fn contracted_pencil_n1() {
        let p = TridiagPencil::from_contracted(&exp_cfraction::<f64>(2)).unwrap();
        assert_eq!(p.t0().to_dense().data(), &[1.0, -1.0, 0.0, 1.0]);
        assert_eq!(p.t1().to_dense().data(), &[0.0, 0.0, -1.0, 0.5]);
        let poles = p.poles().unwrap();
        assert_eq!(poles.finite, vec![Complex64::new(-2.0, 0.0)]);
        assert_eq!(poles.infinite, 1);
        let pfe = p.pfe().unwrap();
        assert!((pfe.weights[0] - Complex64::new(-4.0, 0.0)).norm() < 1e-13);
        assert!((pfe.constant - Complex64::new(-1.0, 0.0)).norm() < 1e-13);
        assert!(matches!(
            TridiagPencil::from_contracted(&exp_cfraction::<f64>(3)),
            Err(PencilError::LengthTooShort { .. })
        ));
    }

    #[test]
    fn diagonal_pencils() {
        let p = TridiagPencil::new(Tridiag::diagonal(vec![1.0, 2.0, 3.0]), Tridiag::identity(3)).unwrap();
        let poles = p.poles().unwrap();
        let re: Vec<f64> = poles.finite.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![1.0, 2.0, 3.0]);
        assert_eq!(poles.infinite, 0);
        let one = TridiagPencil::new(Tridiag::diagonal(vec![0.7]), Tridiag::identity(1)).unwrap();
        let pfe = one.pfe().unwrap();
        assert_eq!(pfe.poles, vec![Complex64::new(0.7, 0.0)]);
        assert_eq!(pfe.weights, vec![Complex64::new(1.0, 0.0)]);
        assert_eq!(pfe.constant, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn longdiv_pencil() {
        let b = vec![Polynomial::from_real(&[0.0, 1.0]), Polynomial::from_real(&[0.0, 1.0])];
        let cf = ContinuedFraction::new(b, vec![Polynomial::one()]).unwrap();
        let p = TridiagPencil::from_longdiv(&cf, false).unwrap();
        assert_eq!(p.t0().to_dense().data(), &[0.0, -1.0, 1.0, 0.0]);
        assert_eq!(p.t1().to_dense().data(), &[-1.0, 0.0, 0.0, -1.0]);
        let s = TridiagPencil::from_longdiv(&cf, true).unwrap();
        assert!(s.t0().is_symmetric() && s.t1().is_symmetric());
        for z in [0.3, -1.7, 2.5] {
            let a = p.entry11_inverse(z).unwrap();
            let b = s.entry11_inverse(z).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.abs());
        }
        let bad = ContinuedFraction::new(vec![Polynomial::one(), Polynomial::one()], vec![Polynomial::constant(2.0)]).unwrap();
        assert!(matches!(TridiagPencil::from_longdiv(&bad, false), Err(PencilError::ShapeViolation { level: 1, .. })));
    }

    #[test]
    fn irregular_pencil_is_refused() {
        let p = TridiagPencil::new(Tridiag::<f64>::zeros(2), Tridiag::zeros(2)).unwrap();
        assert!(!p.is_regular());
        assert_eq!(p.poles(), Err(PencilError::IrregularPencil));
    }
}
