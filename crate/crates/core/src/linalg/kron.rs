//! Perfect-shuffle permutation swapping the factors of a Kronecker product.

/// Index map with `P (B ⊗ C) Pᵀ = C ⊗ B` for `B` of size `n1` and `C` of size `m`.
///
/// Entry `k = i·m + r` of a block vector (block `i`, in-block index `r`) moves
/// to position `r·n1 + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KronPermutation {
    n1: usize,
    m: usize,
}

impl KronPermutation {
    pub fn new(n1: usize, m: usize) -> Self {
        Self { n1, m }
    }

    pub fn len(&self) -> usize {
        self.n1 * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// New position of old index `k`.
    pub fn map(&self, k: usize) -> usize {
        (k % self.m) * self.n1 + k / self.m
    }

    /// The old-to-new index table.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.len()).map(|k| self.map(k)).collect()
    }

    /// The permutation with the roles of the two factors swapped; it is the inverse.
    pub fn inverse(&self) -> Self {
        Self { n1: self.m, m: self.n1 }
    }

    pub fn apply<T: Copy>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.len(), "vector length");
        let mut y = x.to_vec();
        for (k, &v) in x.iter().enumerate() {
            y[self.map(k)] = v;
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_inverse() {
        assert_eq!(KronPermutation::new(1, 1).indices(), vec![0]);
        let p = KronPermutation::new(2, 3);
        assert_eq!(p.indices(), vec![0, 2, 4, 1, 3, 5]);
        let x: Vec<i32> = (0..6).collect();
        assert_eq!(p.inverse().apply(&p.apply(&x)), x);
    }
}
