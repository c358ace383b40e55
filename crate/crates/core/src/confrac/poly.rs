use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Dense polynomial in the monomial basis, coefficients in ascending degree.
///
/// Exact zeros at the top are always stripped, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    /// `c * z^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `a + b z`
    pub fn linear(a: S, b: S) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_real(c)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).copied().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().copied().unwrap_or_else(S::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, z: S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * S::from_real(k as f64))
                .collect(),
        )
    }

    pub fn scale(&self, s: S) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Long division `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Remainder coefficients at or below `tol` in magnitude are treated as
    /// cancelled and dropped from the top. Returns `None` for a zero divisor.
    pub fn div_rem(&self, divisor: &Self, tol: f64) -> Option<(Self, Self)> {
        if divisor.is_zero() {
            return None;
        }
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return Some((Self::zero(), self.clone()));
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
            rem[k + dd] = S::zero();
        }
        rem.truncate(dd);
        while rem.last().is_some_and(|c| c.abs() <= tol) {
            rem.pop();
        }
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// `p / q`, kept unreduced.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<S> {
    pub numerator: Polynomial<S>,
    pub denominator: Polynomial<S>,
}

impl<S: Scalar> RationalFunction<S> {
    /// Returns `None` if the denominator is the zero polynomial.
    pub fn new(numerator: Polynomial<S>, denominator: Polynomial<S>) -> Option<Self> {
        (!denominator.is_zero()).then_some(Self { numerator, denominator })
    }

    /// Value at `z`, or `None` where the denominator vanishes.
    pub fn eval(&self, z: S) -> Option<S> {
        let q = self.denominator.eval(z);
        (!q.is_zero()).then(|| self.numerator.eval(z) / q)
    }

    pub fn reciprocal(&self) -> Option<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Polynomial<f64> {
        Polynomial::from_real(c)
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let q = p(&[1.0, 2.0, 0.0, 0.0]);
        assert_eq!(q.degree(), 1);
        assert!(p(&[0.0, 0.0]).is_zero());
        assert_eq!(p(&[]).degree(), 0);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1.0, 1.0]);
        let b = p(&[-1.0, 1.0]);
        let prod = &a * &b;
        assert_eq!(prod.coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!((&a + &b).coeffs(), &[0.0, 2.0]);
        assert!((&a - &a).is_zero());
        assert_eq!(prod.eval(3.0), 8.0);
        assert_eq!(prod.derivative().coeffs(), &[0.0, 2.0]);
    }

    #[test]
    fn long_division() {
        // z^3 - 2z + 1 = (z - 1)(z^2 + z - 1)
        let n = p(&[1.0, -2.0, 0.0, 1.0]);
        let d = p(&[-1.0, 1.0]);
        let (q, r) = n.div_rem(&d, 0.0).unwrap();
        assert_eq!(q.coeffs(), &[-1.0, 1.0, 1.0]);
        assert!(r.is_zero());
        let (q, r) = p(&[1.0]).div_rem(&p(&[0.0, 1.0]), 0.0).unwrap();
        assert!(q.is_zero());
        assert_eq!(r.coeffs(), &[1.0]);
        assert!(n.div_rem(&Polynomial::zero(), 0.0).is_none());
    }
}
