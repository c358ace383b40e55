//! Scalar field abstraction shared by every module.
//!
//! Everything in the crate is written once against [`Scalar`] and
//! instantiated for `f64` (the continued-fraction route for real
//! coefficients) and [`Complex64`] (shifted systems with complex poles).

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub use num_complex::Complex64;

pub trait Scalar:
    Copy
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
{
    const IS_COMPLEX: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(x: f64) -> Self;
    /// `None` when `z` has a nonzero imaginary part and `Self` is real.
    fn from_complex(z: Complex64) -> Option<Self>;
    fn to_complex(self) -> Complex64;
    fn re(self) -> f64;
    fn conj(self) -> Self;
    fn abs(self) -> f64;
    fn is_finite(self) -> bool;

    /// Shortest text form that parses back to the identical value.
    fn to_text(self) -> String;
    fn parse_text(s: &str) -> Option<Self>;

    fn abs_sq(self) -> f64 {
        let a = self.abs();
        a * a
    }

    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

impl Scalar for f64 {
    const IS_COMPLEX: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn from_complex(z: Complex64) -> Option<Self> {
        (z.im == 0.0).then_some(z.re)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn re(self) -> f64 {
        self
    }
    fn conj(self) -> Self {
        self
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn to_text(self) -> String {
        format!("{self:?}")
    }
    fn parse_text(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
    fn abs_sq(self) -> f64 {
        self * self
    }
}

impl Scalar for Complex64 {
    const IS_COMPLEX: bool = true;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn from_complex(z: Complex64) -> Option<Self> {
        Some(z)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
    fn re(self) -> f64 {
        self.re
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
    fn to_text(self) -> String {
        format!("{:?}{}{:?}i", self.re, if self.im.is_sign_negative() { "-" } else { "+" }, self.im.abs())
    }
    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix('i') {
            // split at the last sign that is not part of an exponent
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'))?;
            let re: f64 = body[..split].parse().ok()?;
            let im: f64 = body[split..].parse().ok()?;
            Some(Complex64::new(re, im))
        } else {
            s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0))
        }
    }
    fn abs_sq(self) -> f64 {
        self.norm_sqr()
    }
}

/// Euclidean norm of a slice.
pub fn norm2<S: Scalar>(x: &[S]) -> f64 {
    x.iter().map(|v| v.abs_sq()).sum::<f64>().sqrt()
}

/// `sum conj(x_i) y_i`.
pub fn dot<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter().zip(y).map(|(a, b)| a.conj() * *b).sum()
}

/// `y += alpha * x`.
pub fn axpy<S: Scalar>(alpha: S, x: &[S], y: &mut [S]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * *xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_text_round_trip() {
        for z in [
            Complex64::new(1.5, -2.25),
            Complex64::new(-0.1, 3e-20),
            Complex64::new(0.0, -0.0),
            Complex64::new(1e300, -7.0e-300),
        ] {
            let s = z.to_text();
            let back = Complex64::parse_text(&s).unwrap();
            assert_eq!(back.re.to_bits(), z.re.to_bits(), "{s}");
            assert_eq!(back.im.to_bits(), z.im.to_bits(), "{s}");
        }
        assert_eq!(Complex64::parse_text("2.5"), Some(Complex64::new(2.5, 0.0)));
    }

    #[test]
    fn real_from_complex_rejects_imaginary() {
        assert_eq!(f64::from_complex(Complex64::new(2.0, 0.0)), Some(2.0));
        assert_eq!(f64::from_complex(Complex64::new(2.0, 1e-30)), None);
    }
}
