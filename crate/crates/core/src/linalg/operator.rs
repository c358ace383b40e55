use crate::scalar::Scalar;

/// Square linear map applied out of place.
pub trait LinearOperator<S: Scalar>: Sync {
    fn dim(&self) -> usize;

    /// `y = Op x`; `y` is overwritten.
    fn apply(&self, x: &[S], y: &mut [S]);

    fn apply_new(&self, x: &[S]) -> Vec<S> {
        let mut y = vec![S::zero(); self.dim()];
        self.apply(x, &mut y);
        y
    }
}

/// Operator backed by a closure.
pub struct FnOperator<F> {
    dim: usize,
    f: F,
}

impl<F> FnOperator<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<S: Scalar, F: Fn(&[S], &mut [S]) + Sync> LinearOperator<S> for FnOperator<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn apply(&self, x: &[S], y: &mut [S]) {
        (self.f)(x, y)
    }
}

/// The identity map.
pub struct Identity(pub usize);

impl<S: Scalar> LinearOperator<S> for Identity {
    fn dim(&self) -> usize {
        self.0
    }
    fn apply(&self, x: &[S], y: &mut [S]) {
        y.copy_from_slice(x);
    }
}
