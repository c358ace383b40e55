//! Tridiagonal matrices and polynomial families `T(z) = Σ_j T^(j) z^j`.

use super::PencilError;
use crate::confrac::Polynomial;
use crate::linalg::DenseMatrix;
use crate::scalar::{Complex64, Scalar};

/// Square tridiagonal matrix stored by diagonals; `sub[i]` is entry
/// `(i + 1, i)` and `sup[i]` is entry `(i, i + 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiag<S> {
    pub sub: Vec<S>,
    pub diag: Vec<S>,
    pub sup: Vec<S>,
}

impl<S: Scalar> Tridiag<S> {
    pub fn new(sub: Vec<S>, diag: Vec<S>, sup: Vec<S>) -> Result<Self, PencilError> {
        let n = diag.len();
        if n == 0 || sub.len() + 1 != n || sup.len() + 1 != n {
            return Err(PencilError::DimensionMismatch { expected: n, found: sub.len().max(sup.len()) + 1 });
        }
        Ok(Self { sub, diag, sup })
    }

    pub fn zeros(dim: usize) -> Self {
        let off = dim.saturating_sub(1);
        Self { sub: vec![S::zero(); off], diag: vec![S::zero(); dim], sup: vec![S::zero(); off] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut t = Self::zeros(dim);
        t.diag.iter_mut().for_each(|d| *d = S::one());
        t
    }

    pub fn diagonal(d: Vec<S>) -> Self {
        let off = d.len().saturating_sub(1);
        Self { sub: vec![S::zero(); off], diag: d, sup: vec![S::zero(); off] }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn get(&self, i: usize, k: usize) -> S {
        if i == k {
            self.diag[i]
        } else if i == k + 1 {
            self.sub[k]
        } else if k == i + 1 {
            self.sup[i]
        } else {
            S::zero()
        }
    }

    /// Mutable access to a band entry; `None` off the band.
    pub fn entry_mut(&mut self, i: usize, k: usize) -> Option<&mut S> {
        if i == k {
            self.diag.get_mut(i)
        } else if i == k + 1 {
            self.sub.get_mut(k)
        } else if k == i + 1 {
            self.sup.get_mut(i)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().chain(&self.sub).chain(&self.sup).all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }

    pub fn transpose(&self) -> Self {
        Self { sub: self.sup.clone(), diag: self.diag.clone(), sup: self.sub.clone() }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Tridiag<T> {
        Tridiag {
            sub: self.sub.iter().map(|&v| f(v)).collect(),
            diag: self.diag.iter().map(|&v| f(v)).collect(),
            sup: self.sup.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scale(&self, s: S) -> Self {
        self.map(|v| v * s)
    }

    /// `self + s · other`.
    pub fn add_scaled(&self, s: S, other: &Self) -> Self {
        let z = |a: &[S], b: &[S]| a.iter().zip(b).map(|(&x, &y)| x + s * y).collect();
        Self { sub: z(&self.sub, &other.sub), diag: z(&self.diag, &other.diag), sup: z(&self.sup, &other.sup) }
    }

    /// `D self D` for `D = diag(d)`.
    pub fn congruence(&self, d: &[S]) -> Self {
        Self {
            sub: self.sub.iter().enumerate().map(|(i, &v)| d[i + 1] * v * d[i]).collect(),
            diag: self.diag.iter().enumerate().map(|(i, &v)| d[i] * v * d[i]).collect(),
            sup: self.sup.iter().enumerate().map(|(i, &v)| d[i] * v * d[i + 1]).collect(),
        }
    }

    /// `D_L self D_R`.
    pub fn two_sided(&self, dl: &[S], dr: &[S]) -> Self {
        Self {
            sub: self.sub.iter().enumerate().map(|(i, &v)| dl[i + 1] * v * dr[i]).collect(),
            diag: self.diag.iter().enumerate().map(|(i, &v)| dl[i] * v * dr[i]).collect(),
            sup: self.sup.iter().enumerate().map(|(i, &v)| dl[i] * v * dr[i + 1]).collect(),
        }
    }

    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * x[i];
                if i > 0 {
                    acc += self.sub[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.sup[i] * x[i + 1];
                }
                acc
            })
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        DenseMatrix::from_fn(self.dim(), |i, k| self.get(i, k))
    }

    /// Number of structurally nonzero entries.
    pub fn nnz(&self) -> usize {
        self.diag.iter().chain(&self.sub).chain(&self.sup).filter(|v| !v.is_zero()).count()
    }
}

/// `T(z) = Σ_j T^(j) z^j`, all terms of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyTridiag<S> {
    terms: Vec<Tridiag<S>>,
}

impl<S: Scalar> PolyTridiag<S> {
    pub fn new(terms: Vec<Tridiag<S>>) -> Result<Self, PencilError> {
        let Some(first) = terms.first() else {
            return Err(PencilError::DimensionMismatch { expected: 1, found: 0 });
        };
        let dim = first.dim();
        if let Some(t) = terms.iter().find(|t| t.dim() != dim) {
            return Err(PencilError::DimensionMismatch { expected: dim, found: t.dim() });
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Tridiag<S>] {
        &self.terms
    }

    /// `n + 1`.
    pub fn dim(&self) -> usize {
        self.terms[0].dim()
    }

    /// Polynomial degree `ℓ` (number of terms minus one).
    pub fn degree(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T + Copy) -> PolyTridiag<T> {
        PolyTridiag { terms: self.terms.iter().map(|t| t.map(f)).collect() }
    }

    pub fn to_complex(&self) -> PolyTridiag<Complex64> {
        self.map(Scalar::to_complex)
    }

    /// Entrywise evaluation at `z`.
    pub fn eval(&self, z: S) -> Tridiag<S> {
        let mut acc = self.terms.last().expect("nonempty").clone();
        for t in self.terms.iter().rev().skip(1) {
            acc = t.add_scaled(S::one(), &acc.scale(z));
        }
        acc
    }

    fn entry_poly(&self, f: impl Fn(&Tridiag<S>) -> S) -> Polynomial<S> {
        Polynomial::new(self.terms.iter().map(f).collect())
    }

    /// `β_i(z)`, the diagonal entry of row `i`.
    pub fn beta(&self, i: usize) -> Polynomial<S> {
        self.entry_poly(|t| t.diag[i])
    }

    /// `α_i(z)`, entry `(i, i - 1)`, for `i ≥ 1`.
    pub fn alpha(&self, i: usize) -> Polynomial<S> {
        self.entry_poly(|t| t.sub[i - 1])
    }

    /// `γ_i(z)`, entry `(i - 1, i)`, for `i ≥ 1`.
    pub fn gamma(&self, i: usize) -> Polynomial<S> {
        self.entry_poly(|t| t.sup[i - 1])
    }

    /// The trailing family obtained by deleting the first row and column.
    pub fn trailing(&self) -> Option<Self> {
        (self.dim() > 1).then(|| Self {
            terms: self
                .terms
                .iter()
                .map(|t| Tridiag { sub: t.sub[1..].to_vec(), diag: t.diag[1..].to_vec(), sup: t.sup[1..].to_vec() })
                .collect(),
        })
    }

    /// Leading principal minors `d_{-1} = 1, d_0, ..., d_n` of `T(z)`.
    pub fn minors(&self, z: S) -> Vec<S> {
        self.minors_with_bound(z).0
    }

    /// Minors together with the same recursion run on absolute values, which
    /// bounds the rounding error of each minor.
    pub fn minors_with_bound(&self, z: S) -> (Vec<S>, Vec<f64>) {
        minors_of(&self.eval(z))
    }

    /// `d_n(z)` and its derivative, by differentiating the minors recursion.
    pub fn det_and_derivative(&self, z: S) -> (S, S) {
        let t = self.eval(z);
        let dt = self.derivative_at(z);
        let n1 = self.dim();
        let (mut d2, mut d1) = (S::one(), t.diag[0]);
        let (mut e2, mut e1) = (S::zero(), dt.diag[0]);
        for i in 1..n1 {
            let ag = t.sub[i - 1] * t.sup[i - 1];
            let dag = dt.sub[i - 1] * t.sup[i - 1] + t.sub[i - 1] * dt.sup[i - 1];
            let d = t.diag[i] * d1 - ag * d2;
            let e = dt.diag[i] * d1 + t.diag[i] * e1 - dag * d2 - ag * e2;
            (d2, d1) = (d1, d);
            (e2, e1) = (e1, e);
        }
        (d1, e1)
    }

    /// Entrywise `T'(z)`.
    fn derivative_at(&self, z: S) -> Tridiag<S> {
        let mut acc = Tridiag::zeros(self.dim());
        let mut zp = S::one();
        for (j, t) in self.terms.iter().enumerate().skip(1) {
            acc = acc.add_scaled(S::from_real(j as f64) * zp, t);
            zp *= z;
        }
        acc
    }

    /// `det T(z)` as a polynomial, with top coefficients that are zero to
    /// within rounding removed.
    pub fn det_polynomial(&self) -> Polynomial<S> {
        let n1 = self.dim();
        let abs_poly = |p: &Polynomial<S>| Polynomial::<f64>::new(p.coeffs().iter().map(|c| c.abs()).collect());
        let (mut d2, mut d1) = (Polynomial::one(), self.beta(0));
        let (mut b2, mut b1) = (Polynomial::<f64>::one(), abs_poly(&self.beta(0)));
        for i in 1..n1 {
            let beta = self.beta(i);
            let ag = &self.alpha(i) * &self.gamma(i);
            let d = &(&beta * &d1) - &(&ag * &d2);
            let b = &(&abs_poly(&beta) * &b1) + &(&(&abs_poly(&self.alpha(i)) * &abs_poly(&self.gamma(i))) * &b2);
            (d2, d1) = (d1, d);
            (b2, b1) = (b1, b);
        }
        let tol = 64.0 * f64::EPSILON * n1 as f64;
        let mut coeffs = d1.coeffs().to_vec();
        while let Some(&c) = coeffs.last() {
            if c.abs() <= tol * b1.coeff(coeffs.len() - 1) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Polynomial::new(coeffs)
    }

    /// `det T(z)` is not identically zero. Tested by evaluating it at more
    /// distinct points than its maximal degree.
    pub fn is_regular(&self) -> bool {
        let count = self.dim() * self.degree() + 1;
        let tol = 64.0 * f64::EPSILON * self.dim() as f64;
        (0..count).any(|k| {
            let z = sample_point::<S>(k, count);
            let (d, b) = self.minors_with_bound(z);
            let (dn, bn) = (*d.last().unwrap(), *b.last().unwrap());
            dn.abs() > tol * bn
        })
    }

    /// `(T(z)^{-1})_{1,1}`.
    ///
    /// The solve with `e_1` eliminates from the bottom row up in continuant
    /// form, so only the first component is formed and no intermediate pivot
    /// is divided by. `SingularAtZ` is reported when `det T(z)` is zero.
    pub fn entry11_inverse(&self, z: S) -> Result<S, PencilError> {
        let t = self.eval(z);
        let n1 = t.dim();
        // e_i = det of the trailing block starting at row i
        let (mut e_next, mut e) = (S::one(), t.diag[n1 - 1]);
        for i in (0..n1 - 1).rev() {
            let ag = t.sub[i] * t.sup[i];
            let e_new = t.diag[i] * e - ag * e_next;
            (e_next, e) = (e, e_new);
            let s = e.abs().max(e_next.abs());
            if s > 1e150 || (s < 1e-150 && s > 0.0) {
                let f = S::from_real(1.0 / s);
                e *= f;
                e_next *= f;
            }
        }
        if e.is_zero() || !e.is_finite() {
            return Err(PencilError::SingularAtZ { z: z.to_complex() });
        }
        Ok(e_next / e)
    }
}

/// Minors and absolute-value bounds of a fixed tridiagonal matrix.
pub(crate) fn minors_of<S: Scalar>(t: &Tridiag<S>) -> (Vec<S>, Vec<f64>) {
    let n1 = t.dim();
    let mut d = Vec::with_capacity(n1 + 1);
    let mut b = Vec::with_capacity(n1 + 1);
    d.push(S::one());
    d.push(t.diag[0]);
    b.push(1.0);
    b.push(t.diag[0].abs());
    for i in 1..n1 {
        let ag = t.sub[i - 1] * t.sup[i - 1];
        d.push(t.diag[i] * d[i] - ag * d[i - 1]);
        b.push(t.diag[i].abs() * b[i] + ag.abs() * b[i - 1]);
    }
    (d, b)
}

/// Distinct sample points: real points in `[-1, 1]` for real fields, points
/// on a circle for complex ones.
fn sample_point<S: Scalar>(k: usize, count: usize) -> S {
    if S::IS_COMPLEX {
        let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.37) / count as f64;
        S::from_complex(Complex64::from_polar(0.9, th)).expect("complex field")
    } else {
        S::from_real(-1.0 + 2.0 * (k as f64 + 0.5) / count as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contracted_exp1() -> PolyTridiag<f64> {
        let t0 = Tridiag::new(vec![0.0], vec![1.0, 1.0], vec![-1.0]).unwrap();
        let t1 = Tridiag::new(vec![-1.0], vec![0.0, 0.5], vec![0.0]).unwrap();
        PolyTridiag::new(vec![t0, t1.scale(-1.0)]).unwrap()
    }

    #[test]
    fn evaluation_and_minors() {
        let p = contracted_exp1();
        assert_eq!(p.eval(0.0), p.terms()[0]);
        let t = p.eval(-2.0);
        assert_eq!(t.to_dense().data(), &[1.0, -1.0, -2.0, 2.0]);
        assert_eq!(p.minors(0.0), vec![1.0, 1.0, 1.0]);
        assert_eq!(p.det_polynomial().coeffs(), &[1.0, 0.5]);
        assert_eq!(p.entry11_inverse(0.0).unwrap(), 1.0);
        assert!(matches!(p.entry11_inverse(-2.0), Err(PencilError::SingularAtZ { .. })));
        assert!(p.is_regular());
        let (d, dd) = p.det_and_derivative(3.0);
        assert_eq!((d, dd), (2.5, 0.5));
    }

    #[test]
    fn diagonal_minors_are_products() {
        let p = PolyTridiag::new(vec![Tridiag::diagonal(vec![2.0, 3.0, 5.0])]).unwrap();
        assert_eq!(p.minors(1.0), vec![1.0, 2.0, 6.0, 30.0]);
        let zero = PolyTridiag::new(vec![Tridiag::<f64>::zeros(3), Tridiag::zeros(3)]).unwrap();
        assert!(!zero.is_regular());
    }

    #[test]
    fn two_by_two_closed_form() {
        // (β0 γ1; α1 β1): (T^-1)_11 = β1 / (β0 β1 - α1 γ1)
        let t = Tridiag::new(vec![2.0], vec![3.0, 5.0], vec![-1.5]).unwrap();
        let p = PolyTridiag::new(vec![t]).unwrap();
        let expect = 5.0 / (15.0 + 3.0);
        assert!((p.entry11_inverse(0.0).unwrap() - expect).abs() < 1e-15);
    }
}
