use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions of cohomology over a field, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    pub fn new(dims: Vec<u64>) -> Self {
        BettiVector(dims)
    }

    /// The empty space: no cohomology in any degree.
    pub fn empty() -> Self {
        BettiVector(Vec::new())
    }

    /// A rational homology sphere of dimension `n`.
    pub fn sphere(n: usize) -> Self {
        let mut dims = vec![0; n + 1];
        dims[0] += 1;
        dims[n] += 1;
        BettiVector(dims)
    }

    pub fn dims(&self) -> &[u64] {
        &self.0
    }

    /// Dimension in degree `k`, zero outside the stored range.
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&d| d != 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_empty_space(&self) -> bool {
        self.total() == 0
    }

    pub fn euler_char(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Betti vector of a disjoint union.
    pub fn disjoint_union(&self, other: &BettiVector) -> BettiVector {
        let len = self.0.len().max(other.0.len());
        BettiVector((0..len).map(|k| self.get(k) + other.get(k)).collect())
    }

    /// Poincaré duality for a closed connected orientable `n`-manifold.
    pub fn is_poincare_dual(&self, n: usize) -> bool {
        self.top_degree().is_some_and(|t| t <= n) && (0..=n).all(|k| self.get(k) == self.get(n - k))
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(BettiVector::new(vec![1, 0, 0, 0, 0, 1]).euler_char(), 0);
        assert_eq!(BettiVector::new(vec![1, 0, 1, 1, 0, 1]).euler_char(), 0);
        assert_eq!(BettiVector::new(vec![1, 0, 2, 0, 1]).euler_char(), 4);
        assert_eq!(BettiVector::empty().euler_char(), 0);
    }

    #[test]
    fn duality_and_unions() {
        assert!(BettiVector::sphere(5).is_poincare_dual(5));
        assert!(!BettiVector::new(vec![1, 0, 1]).is_poincare_dual(3));
        let u = BettiVector::sphere(5).disjoint_union(&BettiVector::sphere(3));
        assert_eq!(u.dims(), &[2, 0, 0, 1, 0, 1]);
    }
}
