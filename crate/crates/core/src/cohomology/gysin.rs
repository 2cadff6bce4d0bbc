//! Rank feasibility for the Smith-Gysin long exact sequence of a circle
//! action on `X` with fixed set `F`:
//!
//! `.. -> R^i -> H^i(X) -> R^(i-1) + H^i(F) -> R^(i+1) -> H^(i+1)(X) -> ..`
//!
//! where `R^i = H^i(X/S^1, F)`. A sequence of vector spaces with given
//! dimensions can be made exact iff the forced map ranks
//! `k_j = a_j - k_(j-1)` stay nonnegative and the last one is zero.

use serde::{Deserialize, Serialize};

use super::BettiVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSolution {
    /// `R[i] = dim H^i(X/S^1, F)` for `0 <= i < dim X`.
    #[serde(rename = "R")]
    pub r: Vec<u64>,
    pub chi_bar: i64,
}

impl ExactSolution {
    /// Euler characteristic of the relative pair `(X/S^1, F)`.
    pub fn chi_relative(&self) -> i64 {
        BettiVector::new(self.r.clone()).euler_char()
    }
}

/// Dimensions of the sequence terms in order, for a full `R` vector.
pub fn sequence_dims(r: &[u64], bx: &BettiVector, bf: &BettiVector, dim_x: usize) -> Vec<u64> {
    let rr = |i: i64| -> u64 {
        if i < 0 {
            0
        } else {
            r.get(i as usize).copied().unwrap_or(0)
        }
    };
    let mut a = Vec::with_capacity(3 * (dim_x + 2));
    for i in 0..=(dim_x + 1) as i64 {
        a.push(rr(i));
        a.push(bx.get(i as usize));
        a.push(rr(i - 1) + bf.get(i as usize));
    }
    a
}

/// Forced ranks of consecutive maps, or `None` if some rank would be negative
/// or the sequence does not terminate exactly.
pub fn forced_ranks(a: &[u64]) -> Option<Vec<u64>> {
    let mut ranks = Vec::with_capacity(a.len());
    let mut prev = 0u64;
    for &dim in a {
        let k = dim.checked_sub(prev)?;
        ranks.push(k);
        prev = k;
    }
    (prev == 0).then_some(ranks)
}

/// Every `R` vector compatible with exactness, in lexicographic order.
pub fn smith_gysin_solve(bx: &BettiVector, bf: &BettiVector, dim_x: usize) -> Vec<ExactSolution> {
    let bound = bx.total() + bf.total();
    let chi_f = bf.euler_char();
    let mut out = Vec::new();
    let mut r = Vec::with_capacity(dim_x);

    // Ranks through the term R^(i-1) + H^i(F) depend only on R^0..R^(i-1).
    fn prefix_ok(r: &[u64], bx: &BettiVector, bf: &BettiVector, dim_x: usize) -> bool {
        let a = sequence_dims(r, bx, bf, dim_x);
        let known = 3 * r.len();
        let mut prev = 0u64;
        for &dim in &a[..known] {
            match dim.checked_sub(prev) {
                Some(k) => prev = k,
                None => return false,
            }
        }
        true
    }

    fn go(
        r: &mut Vec<u64>,
        bx: &BettiVector,
        bf: &BettiVector,
        dim_x: usize,
        bound: u64,
        chi_f: i64,
        out: &mut Vec<ExactSolution>,
    ) {
        if r.len() == dim_x {
            let a = sequence_dims(r, bx, bf, dim_x);
            if forced_ranks(&a).is_some() {
                let rel = BettiVector::new(r.clone()).euler_char();
                out.push(ExactSolution {
                    r: r.clone(),
                    chi_bar: rel + chi_f,
                });
            }
            return;
        }
        for v in 0..=bound {
            r.push(v);
            if prefix_ok(r, bx, bf, dim_x) {
                go(r, bx, bf, dim_x, bound, chi_f, out);
            }
            r.pop();
        }
    }

    go(&mut r, bx, bf, dim_x, bound, chi_f, &mut out);
    out
}
