//! Traces of finite-order automorphisms of small rational vector spaces and
//! the divisibility test they feed.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Integers that occur as the trace of a finite-order automorphism of
/// `Q^k`, for `k <= 2`.
///
/// The characteristic polynomial splits into cyclotomic factors of degree
/// at most `k`: `x - 1`, `x + 1`, and for `k = 2` the quadratics with roots
/// of order 3, 4, 6 (traces -1, 0, 1). Odd order keeps only orders 1 and 3.
pub fn integer_trace_set(k: u64, odd_order_only: bool) -> Result<BTreeSet<i64>> {
    let lines: &[i64] = if odd_order_only { &[1] } else { &[1, -1] };
    let planes: &[i64] = if odd_order_only { &[-1] } else { &[-1, 0, 1] };
    let set = match k {
        0 => BTreeSet::from([0]),
        1 => lines.iter().copied().collect(),
        2 => {
            let mut s: BTreeSet<i64> = planes.iter().copied().collect();
            for &a in lines {
                for &b in lines {
                    s.insert(a + b);
                }
            }
            s
        }
        _ => return Err(Error::DimensionTooLarge { degree: 0, dim: k }),
    };
    Ok(set)
}

/// Per-degree dimensions of the cohomology an element acts on, plus the
/// parity of its order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzSpec {
    pub dims: Vec<u64>,
    pub odd_order: bool,
}

/// Every Lefschetz number `sum (-1)^i tr_i` with each `tr_i` drawn from the
/// trace set of degree `i`.
pub fn lefschetz_value_set(spec: &LefschetzSpec) -> Result<BTreeSet<i64>> {
    let mut values = BTreeSet::from([0i64]);
    for (degree, &dim) in spec.dims.iter().enumerate() {
        let traces = integer_trace_set(dim, spec.odd_order)
            .map_err(|_| Error::DimensionTooLarge { degree, dim })?;
        let sign = if degree % 2 == 0 { 1 } else { -1 };
        values = values
            .iter()
            .flat_map(|&v| traces.iter().map(move |&t| v + sign * t))
            .collect();
    }
    Ok(values)
}

/// The quotient whose order must divide a Lefschetz number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientGroup {
    /// A group in the class with a normal cyclic subgroup of index `d`.
    CyclicIndex(u64),
    /// `Z_p x Z_p` modulo one cyclic factor.
    ElementaryAbelian(u64),
}

impl QuotientGroup {
    pub fn index(self) -> u64 {
        match self {
            QuotientGroup::CyclicIndex(d) => d,
            QuotientGroup::ElementaryAbelian(p) => p,
        }
    }

    pub fn validate(self) -> Result<()> {
        match self {
            QuotientGroup::CyclicIndex(0) => {
                Err(Error::InvalidArgument("index d must be at least 1".into()))
            }
            QuotientGroup::ElementaryAbelian(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for QuotientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientGroup::CyclicIndex(d) => write!(f, "cd:{d}"),
            QuotientGroup::ElementaryAbelian(p) => write!(f, "zpxzp:{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "surviving", rename_all = "lowercase")]
pub enum Verdict {
    Excluded,
    Allowed(Vec<i64>),
}

impl Verdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, Verdict::Excluded)
    }
}

/// The scenario survives only if the quotient order divides some achievable
/// Lefschetz number.
pub fn divisibility_obstruction(
    group: QuotientGroup,
    lef_values: &BTreeSet<i64>,
) -> Result<Verdict> {
    group.validate()?;
    let n = group.index() as i64;
    let surviving: Vec<i64> = lef_values.iter().copied().filter(|v| v % n == 0).collect();
    Ok(if surviving.is_empty() {
        Verdict::Excluded
    } else {
        Verdict::Allowed(surviving)
    })
}

/// Largest divisors of `candidates` that pass the divisibility test: the
/// indices `d` (among `candidates`) not excluded by `lef_values`.
pub fn surviving_indices(candidates: &[u64], lef_values: &BTreeSet<i64>) -> BTreeSet<u64> {
    candidates
        .iter()
        .copied()
        .filter(|&d| {
            d >= 1
                && !divisibility_obstruction(QuotientGroup::CyclicIndex(d), lef_values)
                    .expect("d >= 1")
                    .is_excluded()
        })
        .collect()
}
