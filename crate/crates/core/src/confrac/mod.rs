//! Continued fractions with polynomial partial numerators and denominators.
//!
//! A [`ContinuedFraction`] stores `b_0 ... b_n` and `c_1 ... c_n` for
//!
//! ```text
//! g_n(z) = b_0(z) + c_1(z) / (b_1(z) + c_2(z) / (b_2(z) + ... + c_n(z) / b_n(z)))
//! ```
//!
//! and provides the forward three-term recursion for `p_n / q_n`, the
//! backward tail recursion, equivalence transforms, contraction of regular
//! C-fractions, inversion and the Euclidean construction from a rational
//! function.

mod builders;
mod poly;
mod text;

pub use builders::{exp_cfraction, sqrt1p_cfraction};
pub use poly::{Polynomial, RationalFunction};
pub use text::{from_text, to_text};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CfError {
    #[error("continued fraction needs {} denominators for {} numerators, got {b}", .c + 1, .c)]
    LengthMismatch { b: usize, c: usize },
    #[error("approximant index {n} exceeds continued fraction length {len}")]
    IndexOutOfRange { n: usize, len: usize },
    #[error("denominator b_{level} + t_{level} vanishes")]
    DivisionByZero { level: usize },
    #[error("invalid scaling factor at index {index}")]
    InvalidScaling { index: usize },
    #[error("level {level} does not have regular C-fraction shape")]
    NotACFraction { level: usize },
    #[error("rational function has a zero denominator")]
    ZeroDenominator,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `b_0 + K_{i=1}^{n} c_i / b_i` with polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ContinuedFraction<S> {
    b: Vec<Polynomial<S>>,
    /// `c[0]` holds `c_1`.
    c: Vec<Polynomial<S>>,
}

impl<S: Scalar> ContinuedFraction<S> {
    /// `b` holds `b_0..b_n`, `c` holds `c_1..c_n`.
    pub fn new(b: Vec<Polynomial<S>>, c: Vec<Polynomial<S>>) -> Result<Self, CfError> {
        if b.len() != c.len() + 1 {
            return Err(CfError::LengthMismatch { b: b.len(), c: c.len() });
        }
        Ok(Self { b, c })
    }

    /// Regular C-fraction `b_0 + K c_i z / 1`.
    pub fn c_fraction(b0: S, c: &[S]) -> Self {
        let b = std::iter::once(Polynomial::constant(b0))
            .chain(c.iter().map(|_| Polynomial::one()))
            .collect();
        let c = c.iter().map(|&ci| Polynomial::monomial(ci, 1)).collect();
        Self { b, c }
    }

    /// Number of levels `n`.
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn b(&self, i: usize) -> &Polynomial<S> {
        &self.b[i]
    }

    /// Partial numerator `c_i`, `1 <= i <= n`.
    pub fn c(&self, i: usize) -> &Polynomial<S> {
        &self.c[i - 1]
    }

    pub fn partial_denominators(&self) -> &[Polynomial<S>] {
        &self.b
    }

    pub fn partial_numerators(&self) -> &[Polynomial<S>] {
        &self.c
    }

    /// Maximum degree over all entries, recomputed from the coefficients.
    pub fn degree_bound(&self) -> usize {
        self.b.iter().chain(&self.c).map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Truncation to the first `n` levels.
    pub fn truncate(&self, n: usize) -> Result<Self, CfError> {
        self.check_index(n)?;
        Ok(Self { b: self.b[..=n].to_vec(), c: self.c[..n].to_vec() })
    }

    /// Either all `c_i` are nonzero, or from the first vanishing `c_k` on
    /// every `b_j` is one and every `c_j` zero.
    pub fn satisfies_finite_convention(&self) -> bool {
        match self.c.iter().position(Polynomial::is_zero) {
            None => true,
            Some(k) => {
                self.c[k..].iter().all(Polynomial::is_zero)
                    && self.b[k + 1..].iter().all(|b| *b == Polynomial::one())
            }
        }
    }

    /// If this is a regular C-fraction, returns `b_0` and the scalars `c_i`.
    pub fn as_c_fraction(&self) -> Result<(S, Vec<S>), CfError> {
        if !self.b[0].is_constant() {
            return Err(CfError::NotACFraction { level: 0 });
        }
        let mut cs = Vec::with_capacity(self.c.len());
        for i in 1..=self.len() {
            let ci = self.c(i);
            let linear = ci.degree() <= 1 && ci.coeff(0).is_zero();
            if *self.b(i) != Polynomial::one() || !linear {
                return Err(CfError::NotACFraction { level: i });
            }
            cs.push(ci.coeff(1));
        }
        Ok((self.b[0].coeff(0), cs))
    }

    fn check_index(&self, n: usize) -> Result<(), CfError> {
        if n > self.len() {
            return Err(CfError::IndexOutOfRange { n, len: self.len() });
        }
        Ok(())
    }

    /// `g_n = p_n / q_n` from the forward three-term recursion seeded with
    /// `(p_{-1}, q_{-1}) = (1, 0)` and `(p_0, q_0) = (b_0, 1)`.
    pub fn approximant(&self, n: usize) -> Result<RationalFunction<S>, CfError> {
        self.check_index(n)?;
        let (mut p_prev, mut q_prev) = (Polynomial::one(), Polynomial::zero());
        let (mut p, mut q) = (self.b[0].clone(), Polynomial::one());
        for i in 1..=n {
            let p_next = &(&self.b[i] * &p) + &(self.c(i) * &p_prev);
            let q_next = &(&self.b[i] * &q) + &(self.c(i) * &q_prev);
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        // p_n and q_n never vanish together, so q_n = 0 only if g_n is the
        // point at infinity for every z; keep the pair anyway.
        Ok(RationalFunction { numerator: p, denominator: q })
    }

    /// Tails `t_0(z), ..., t_n(z)` with `t_n = 0` and
    /// `t_i = c_{i+1} / (b_{i+1} + t_{i+1})`.
    pub fn tails(&self, n: usize, z: S) -> Result<Vec<S>, CfError> {
        self.check_index(n)?;
        let mut t = vec![S::zero(); n + 1];
        for i in (0..n).rev() {
            let denom = self.b[i + 1].eval(z) + t[i + 1];
            if denom.is_zero() {
                return Err(CfError::DivisionByZero { level: i + 1 });
            }
            t[i] = self.c(i + 1).eval(z) / denom;
        }
        Ok(t)
    }

    /// `g_n(z) = b_0(z) + t_0(z)` by the backward recursion.
    pub fn eval_backward(&self, n: usize, z: S) -> Result<S, CfError> {
        let t = self.tails(n, z)?;
        Ok(self.b[0].eval(z) + t[0])
    }

    /// Expands level `i` by `d_i`: `c_i <- d_{i-1} d_i c_i`, `b_i <- d_i b_i`.
    /// Requires `d_0 = 1`, all `d_i` nonzero, and one factor per level.
    pub fn equivalence_transform(&self, d: &[S]) -> Result<Self, CfError> {
        if d.len() != self.len() + 1 {
            return Err(CfError::InvalidScaling { index: d.len().min(self.len() + 1) });
        }
        if d[0] != S::one() {
            return Err(CfError::InvalidScaling { index: 0 });
        }
        if let Some(index) = d.iter().position(|x| x.is_zero()) {
            return Err(CfError::InvalidScaling { index });
        }
        let b = self.b.iter().zip(d).map(|(bi, &di)| bi.scale(di)).collect();
        let c = (1..=self.len()).map(|i| self.c(i).scale(d[i - 1] * d[i])).collect();
        Ok(Self { b, c })
    }

    /// Contraction of a regular C-fraction. The result has `floor(n / 2)`
    /// levels and its `k`-th approximant equals the `2k`-th of `self`.
    pub fn contract(&self) -> Result<Self, CfError> {
        let (b0, c) = self.as_c_fraction()?;
        let half = c.len() / 2;
        // c[i - 1] is c_i
        let ci = |i: usize| c[i - 1];
        let mut b = vec![Polynomial::constant(b0)];
        let mut num = Vec::with_capacity(half);
        for k in 1..=half {
            if k == 1 {
                num.push(Polynomial::monomial(ci(1), 1));
                b.push(Polynomial::linear(S::one(), ci(2)));
            } else {
                num.push(Polynomial::monomial(-(ci(2 * k - 2) * ci(2 * k - 1)), 2));
                b.push(Polynomial::linear(S::one(), ci(2 * k) + ci(2 * k - 1)));
            }
        }
        Ok(Self { b, c: num })
    }

    /// `1 / g = 0 + 1 / (b_0 + c_1 / (b_1 + ...))`, one level longer.
    pub fn invert(&self) -> Self {
        let b = std::iter::once(Polynomial::zero()).chain(self.b.iter().cloned()).collect();
        let c = std::iter::once(Polynomial::one()).chain(self.c.iter().cloned()).collect();
        Self { b, c }
    }

    /// Finite continued fraction of `r` by Euclidean polynomial division.
    ///
    /// All partial numerators are one and the `b_i` are the successive
    /// quotients. Each remainder is made monic (numerator and denominator of
    /// the next quotient step are scaled together), and remainder coefficients
    /// within rounding of zero are dropped.
    pub fn from_rational(r: &RationalFunction<S>) -> Result<Self, CfError> {
        if r.denominator.is_zero() {
            return Err(CfError::ZeroDenominator);
        }
        let mut num = r.numerator.clone();
        let mut den = r.denominator.clone();
        let mut b = Vec::new();
        loop {
            let scale = num.max_abs_coeff().max(den.max_abs_coeff());
            let tol = 64.0 * f64::EPSILON * scale;
            let (quot, rem) = num.div_rem(&den, tol).ok_or(CfError::ZeroDenominator)?;
            b.push(quot);
            if rem.is_zero() {
                break;
            }
            let inv = S::one() / rem.leading();
            num = den.scale(inv);
            den = rem.scale(inv);
        }
        let c = vec![Polynomial::one(); b.len() - 1];
        Ok(Self { b, c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_cf(n: usize) -> ContinuedFraction<f64> {
        exp_cfraction(n)
    }

    #[test]
    fn approximant_seed_and_second_level() {
        let cf = exp_cf(4);
        let g0 = cf.approximant(0).unwrap();
        assert_eq!(g0.numerator.coeffs(), &[1.0]);
        assert_eq!(g0.denominator.coeffs(), &[1.0]);

        // g_1 = 1 + z
        let g1 = cf.approximant(1).unwrap();
        assert_eq!(g1.numerator.coeffs(), &[1.0, 1.0]);
        assert_eq!(g1.denominator.coeffs(), &[1.0]);

        // g_2 = (1 + z/2) / (1 - z/2): p_2 = (1+z) - z/2, q_2 = 1 - z/2
        let g2 = cf.approximant(2).unwrap();
        assert_eq!(g2.numerator.coeffs(), &[1.0, 0.5]);
        assert_eq!(g2.denominator.coeffs(), &[1.0, -0.5]);
        assert!(cf.approximant(5).is_err());
    }

    #[test]
    fn vanishing_numerators_leave_b0() {
        let cf = ContinuedFraction::c_fraction(3.0, &[0.0, 0.0, 0.0]);
        assert!(cf.satisfies_finite_convention());
        let g = cf.approximant(3).unwrap();
        for z in [-2.0, 0.5, 7.0] {
            assert_eq!(g.eval(z), Some(3.0));
        }
    }

    #[test]
    fn backward_evaluation() {
        assert_eq!(exp_cf(10).eval_backward(10, 0.0).unwrap(), 1.0);
        let e = exp_cf(30).eval_backward(30, 1.0).unwrap();
        let series: f64 = (0..25).scan(1.0, |f, k| {
            let term = 1.0 / *f;
            *f *= (k + 1) as f64;
            Some(term)
        }).sum();
        assert!((e - series).abs() < 1e-12, "{e} vs {series}");
        let s = sqrt1p_cfraction::<f64>(60).eval_backward(60, 3.0).unwrap();
        assert!((s - 2.0).abs() < 1e-10);
    }

    #[test]
    fn tails_by_hand() {
        let cf = exp_cf(2);
        assert_eq!(cf.tails(0, 1.0).unwrap(), vec![0.0]);
        let t = cf.tails(2, 1.0).unwrap();
        assert_eq!(t, vec![2.0, -0.5, 0.0]);
        let g = cf.approximant(2).unwrap().eval(1.0).unwrap();
        assert_eq!(cf.b(0).eval(1.0) + t[0], g);
    }

    #[test]
    fn vanishing_tail_denominator_reports_level() {
        // b_0 + z/(1 + (-1/2) z / 1) has denominator 1 - z/2 = 0 at z = 2
        let cf = exp_cf(2);
        assert_eq!(cf.tails(2, 2.0), Err(CfError::DivisionByZero { level: 1 }));
    }

    #[test]
    fn equivalence_transform_identity_and_inverse() {
        let cf = exp_cf(5);
        assert_eq!(cf.equivalence_transform(&[1.0; 6]).unwrap(), cf);
        let d = [1.0, 2.0, 0.5, 4.0, 0.25, 8.0];
        let inv: Vec<f64> = d.iter().map(|x| 1.0 / x).collect();
        let back = cf.equivalence_transform(&d).unwrap().equivalence_transform(&inv).unwrap();
        assert_eq!(back, cf);
        assert_eq!(cf.equivalence_transform(&[2.0, 1.0, 1.0, 1.0, 1.0, 1.0]), Err(CfError::InvalidScaling { index: 0 }));
        assert_eq!(cf.equivalence_transform(&[1.0, 1.0, 0.0, 1.0, 1.0, 1.0]), Err(CfError::InvalidScaling { index: 2 }));
    }

    #[test]
    fn equivalence_transform_preserves_values() {
        let cf = exp_cf(6);
        let mut d = vec![1.0; 7];
        d[1] = 2.0;
        let t = cf.equivalence_transform(&d).unwrap();
        for z in [0.1, 1.0, -0.5] {
            let a = cf.approximant(6).unwrap().eval(z).unwrap();
            let b = t.approximant(6).unwrap().eval(z).unwrap();
            assert!((a - b).abs() <= 1e-13 * a.abs());
        }
    }

    #[test]
    fn contraction_of_smallest_case() {
        let cf = ContinuedFraction::c_fraction(2.0, &[3.0, 5.0]);
        let k = cf.contract().unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k.b(0).coeffs(), &[2.0]);
        assert_eq!(k.c(1).coeffs(), &[0.0, 3.0]);
        assert_eq!(k.b(1).coeffs(), &[1.0, 5.0]);
    }

    #[test]
    fn contraction_of_exp_matches_second_approximant() {
        let k = exp_cf(2).contract().unwrap();
        let g = k.approximant(1).unwrap();
        assert_eq!(g.numerator.coeffs(), &[1.0, 0.5]);
        assert_eq!(g.denominator.coeffs(), &[1.0, -0.5]);
    }

    #[test]
    fn contraction_rejects_other_shapes() {
        let cf = ContinuedFraction::new(
            vec![Polynomial::<f64>::one(), Polynomial::from_real(&[0.0, 1.0])],
            vec![Polynomial::one()],
        )
        .unwrap();
        assert_eq!(cf.contract(), Err(CfError::NotACFraction { level: 1 }));
    }

    #[test]
    fn inversion() {
        let c = ContinuedFraction::new(vec![Polynomial::constant(5.0)], vec![]).unwrap();
        assert_eq!(c.invert().eval_backward(1, 0.3).unwrap(), 0.2);
        let cf = exp_cf(40);
        let inv = cf.invert().eval_backward(41, 1.0).unwrap();
        assert!((inv - (-1.0f64).exp()).abs() < 1e-12);
        let twice = cf.invert().invert();
        for z in [0.3, -1.2, 2.0] {
            let a = cf.eval_backward(40, z).unwrap();
            let b = twice.eval_backward(42, z).unwrap();
            assert!((a - b).abs() <= 1e-14 * a.abs());
        }
    }

    #[test]
    fn euclidean_construction() {
        let r = RationalFunction::new(Polynomial::<f64>::from_real(&[1.0, 1.0]), Polynomial::one()).unwrap();
        let cf = ContinuedFraction::from_rational(&r).unwrap();
        assert_eq!(cf.len(), 0);
        assert_eq!(cf.b(0).coeffs(), &[1.0, 1.0]);

        let r = RationalFunction::new(Polynomial::<f64>::one(), Polynomial::from_real(&[0.0, 1.0])).unwrap();
        let cf = ContinuedFraction::from_rational(&r).unwrap();
        assert_eq!(cf.len(), 1);
        assert!(cf.b(0).is_zero());
        assert_eq!(cf.b(1).coeffs(), &[0.0, 1.0]);
        assert_eq!(cf.c(1), &Polynomial::one());

        let zero_den = RationalFunction { numerator: Polynomial::<f64>::one(), denominator: Polynomial::zero() };
        assert_eq!(ContinuedFraction::from_rational(&zero_den), Err(CfError::ZeroDenominator));
    }

    #[test]
    fn euclidean_construction_reproduces_pade_values() {
        let r = RationalFunction::new(Polynomial::from_real(&[1.0, 0.5]), Polynomial::from_real(&[1.0, -0.5])).unwrap();
        let cf = ContinuedFraction::from_rational(&r).unwrap();
        assert!(cf.partial_numerators().iter().all(|c| *c == Polynomial::one()));
        let full = cf.approximant(cf.len()).unwrap();
        for k in 0..20 {
            let z = -1.9 + 0.2 * k as f64 + 0.013;
            let want = r.eval(z).unwrap();
            let got = full.eval(z).unwrap();
            assert!((want - got).abs() <= 1e-12 * want.abs().max(1.0), "z={z}");
        }
    }
}
