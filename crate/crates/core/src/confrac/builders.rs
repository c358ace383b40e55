//! Regular C-fractions for the two model functions.

use super::ContinuedFraction;
use crate::scalar::Scalar;

/// Regular C-fraction of `e^z` with `n` levels: `b_0 = 1`, `c_1 = 1`,
/// `c_i = -1/(2(i-1))` for even `i > 1` and `c_i = 1/(2i)` for odd `i > 1`.
///
/// Its approximants form the descending Padé staircase of `e^z`, so the
/// reciprocal approximates `e^{-z}`.
pub fn exp_cfraction<S: Scalar>(n: usize) -> ContinuedFraction<S> {
    let c: Vec<S> = (1..=n)
        .map(|i| match i {
            1 => 1.0,
            i if i % 2 == 0 => -1.0 / (2.0 * (i - 1) as f64),
            i => 1.0 / (2.0 * i as f64),
        })
        .map(S::from_real)
        .collect();
    ContinuedFraction::c_fraction(S::one(), &c)
}

/// Regular C-fraction of `sqrt(1 + z)` (valid for `|Arg(1 + z)| < pi`):
/// `b_0 = 1`, `c_1 = 1/2`, `c_i = 1/4` for `i > 1`.
pub fn sqrt1p_cfraction<S: Scalar>(n: usize) -> ContinuedFraction<S> {
    let c: Vec<S> = (1..=n).map(|i| S::from_real(if i == 1 { 0.5 } else { 0.25 })).collect();
    ContinuedFraction::c_fraction(S::one(), &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_coefficients() {
        let (b0, c) = exp_cfraction::<f64>(5).as_c_fraction().unwrap();
        assert_eq!(b0, 1.0);
        assert_eq!(c, vec![1.0, -0.5, 1.0 / 6.0, -1.0 / 6.0, 0.1]);
    }

    #[test]
    fn exp_low_order_approximants() {
        let cf = exp_cfraction::<f64>(2);
        let g1 = cf.approximant(1).unwrap();
        assert_eq!(g1.numerator.coeffs(), &[1.0, 1.0]);
        let g2 = cf.eval_backward(2, 0.2).unwrap();
        assert!((g2 - 0.2f64.exp()).abs() <= 2e-3);
    }

    #[test]
    fn sqrt1p_coefficients_and_values() {
        let (b0, c) = sqrt1p_cfraction::<f64>(3).as_c_fraction().unwrap();
        assert_eq!((b0, c), (1.0, vec![0.5, 0.25, 0.25]));
        assert_eq!(sqrt1p_cfraction::<f64>(10).eval_backward(10, 0.0).unwrap(), 1.0);
        let v = sqrt1p_cfraction::<f64>(80).eval_backward(80, 0.21).unwrap();
        assert!((v - 1.1).abs() < 1e-10);
    }
}
