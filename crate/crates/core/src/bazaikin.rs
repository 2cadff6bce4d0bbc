//! Bazaikin parameter tuples: admissibility, curvature sign, the order of
//! the torsion in degrees 6 and 8, and the resulting integral and mod-p
//! cohomology.
//!
//! All arithmetic is exact. The torsion order `e3 / 8` is kept as a
//! rational number because it need not be an integer for an admissible
//! tuple; callers get an integrality flag instead of a rejection.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::BettiVector;
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Top degree of a Bazaikin space.
pub const TOP_DEGREE: usize = 13;

/// Five integer weights `q1..q5` describing a candidate Bazaikin space.
///
/// The entries are kept as given; [`QTuple::canonicalize`] produces the
/// representative of the orbit under permutations and a global sign flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QTuple(pub [i64; 5]);

impl QTuple {
    pub fn new(entries: [i64; 5]) -> Self {
        QTuple(entries)
    }

    pub fn entries(&self) -> [i64; 5] {
        self.0
    }

    /// `q0 = q1 + ... + q5`.
    pub fn q0(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Canonical representative: sorted non-increasing, with the sign chosen
    /// so that positive entries are in the majority. When both signs give
    /// the same number of positive entries the lexicographically larger
    /// sorted tuple wins.
    pub fn canonicalize(&self) -> QTuple {
        let sorted_desc = |mut v: [i64; 5]| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        let plus = sorted_desc(self.0);
        let minus = sorted_desc(self.0.map(|x| -x));
        let positives = |v: &[i64; 5]| v.iter().filter(|&&x| x > 0).count();
        let pick = match positives(&plus).cmp(&positives(&minus)) {
            Ordering::Greater => plus,
            Ordering::Less => minus,
            Ordering::Equal => plus.max(minus),
        };
        QTuple(pick)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }
}

impl fmt::Display for QTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "({a},{b},{c},{d},{e})")
    }
}

/// A combination of two disjoint index pairs whose sums do not have gcd 2.
/// Indices are 1-based to match the `q1..q5` labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingPair {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub gcd: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub all_odd: bool,
    pub failing_pairs: Vec<FailingPair>,
    pub verdict: bool,
}

/// The 15 unordered pairs `{{i,j},{k,l}}` of disjoint 2-subsets of `0..5`.
///
/// Every permutation condition `gcd(q_s(1)+q_s(2), q_s(3)+q_s(4)) = 2` over
/// `S_5` reads one of these combinations, and gcd is symmetric, so these 15
/// cover the whole quantifier.
pub fn disjoint_pair_combinations() -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::with_capacity(15);
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in 0..5 {
                for l in (k + 1)..5 {
                    if k == i || k == j || l == i || l == j {
                        continue;
                    }
                    // each unordered combination once
                    if (i, j) < (k, l) {
                        out.push(((i, j), (k, l)));
                    }
                }
            }
        }
    }
    out
}

pub fn check_free(q: &QTuple) -> FreenessReport {
    let e = q.0;
    let all_odd = e.iter().all(|x| x.is_odd());
    let failing_pairs: Vec<FailingPair> = disjoint_pair_combinations()
        .into_iter()
        .filter_map(|((i, j), (k, l))| {
            let g = (e[i] + e[j]).gcd(&(e[k] + e[l]));
            (g != 2).then_some(FailingPair {
                first: (i + 1, j + 1),
                second: (k + 1, l + 1),
                gcd: g,
            })
        })
        .collect();
    let verdict = all_odd && failing_pairs.is_empty();
    FreenessReport {
        all_odd,
        failing_pairs,
        verdict,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curvature {
    #[serde(rename = "positive")]
    PositiveAll,
    #[serde(rename = "negative")]
    NegativeAll,
    Mixed,
}

impl Curvature {
    pub fn as_str(self) -> &'static str {
        match self {
            Curvature::PositiveAll => "positive",
            Curvature::NegativeAll => "negative",
            Curvature::Mixed => "mixed",
        }
    }
}

pub fn check_curvature(q: &QTuple) -> Curvature {
    let e = q.0;
    let sums = (0..5).flat_map(|i| ((i + 1)..5).map(move |j| e[i] + e[j]));
    let (mut pos, mut neg) = (true, true);
    for s in sums {
        pos &= s > 0;
        neg &= s < 0;
    }
    match (pos, neg) {
        (true, _) => Curvature::PositiveAll,
        (_, true) => Curvature::NegativeAll,
        _ => Curvature::Mixed,
    }
}

/// Third elementary symmetric polynomial of the five weights.
pub fn e3(q: &QTuple) -> i64 {
    let e = q.0;
    let mut total = 0;
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in (j + 1)..5 {
                total += e[i] * e[j] * e[k];
            }
        }
    }
    total
}

/// The torsion order `m = e3 / 8` as an exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct H6Order {
    pub e3: i64,
    pub value: Ratio<i64>,
    pub integral: bool,
}

impl H6Order {
    /// `e3/8` written without reduction, e.g. `"10/8"`.
    pub fn unreduced(&self) -> String {
        format!("{}/8", self.e3)
    }

    /// Whether the odd prime `p` divides `m`. The denominator is a power of
    /// two, so this is decided on `e3` and is meaningful even when `m` is
    /// not an integer.
    pub fn divisible_by_odd_prime(&self, p: u64) -> bool {
        debug_assert!(p % 2 == 1);
        self.e3 % p as i64 == 0
    }
}

pub fn h6_order(q: &QTuple) -> H6Order {
    let e3 = e3(q);
    let value = Ratio::new(e3, 8);
    H6Order {
        e3,
        value,
        integral: value.is_integer(),
    }
}

/// One entry of an integral cohomology group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupEntry {
    Zero,
    Free(u64),
    Torsion(u64),
}

impl GroupEntry {
    pub fn free_rank(self) -> u64 {
        match self {
            GroupEntry::Free(r) => r,
            _ => 0,
        }
    }

    fn has_p_torsion(self, p: u64) -> bool {
        matches!(self, GroupEntry::Torsion(m) if m % p == 0)
    }
}

/// Integral cohomology of a Bazaikin space, degrees `0..=13`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyProfile {
    entries: Vec<GroupEntry>,
}

impl CohomologyProfile {
    /// The Bazaikin pattern for a torsion order `m >= 1`: `Z` in degrees
    /// 0, 2, 4, 9, 11, 13 and `Z_m` in degrees 6 and 8 (zero when `m = 1`).
    pub fn from_torsion_order(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::DegenerateTorsion);
        }
        let mut entries = vec![GroupEntry::Zero; TOP_DEGREE + 1];
        for k in [0, 2, 4, 9, 11, 13] {
            entries[k] = GroupEntry::Free(1);
        }
        if m > 1 {
            entries[6] = GroupEntry::Torsion(m);
            entries[8] = GroupEntry::Torsion(m);
        }
        Ok(CohomologyProfile { entries })
    }

    pub fn entries(&self) -> &[GroupEntry] {
        &self.entries
    }

    pub fn get(&self, degree: usize) -> GroupEntry {
        self.entries
            .get(degree)
            .copied()
            .unwrap_or(GroupEntry::Zero)
    }

    pub fn torsion_order(&self) -> u64 {
        match self.get(6) {
            GroupEntry::Torsion(m) => m,
            _ => 1,
        }
    }
}

pub fn integral_cohomology(q: &QTuple) -> Result<CohomologyProfile> {
    if !check_free(q).verdict {
        return Err(Error::NotFree(q.0));
    }
    let m = h6_order(q);
    if !m.integral {
        return Err(Error::NonIntegralTorsion { e3: m.e3 });
    }
    CohomologyProfile::from_torsion_order(m.value.to_integer().unsigned_abs())
}

/// Rational Betti numbers: the free ranks.
pub fn rational_betti(profile: &CohomologyProfile) -> BettiVector {
    BettiVector::new(profile.entries.iter().map(|e| e.free_rank()).collect())
}

/// Universal-coefficient expansion of the profile with `Z_p` coefficients.
pub fn mod_p_betti(profile: &CohomologyProfile, p: u64) -> Result<BettiVector> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let dims = (0..=TOP_DEGREE)
        .map(|k| {
            let here = profile.get(k);
            let next = profile.get(k + 1);
            here.free_rank() + u64::from(here.has_p_torsion(p)) + u64::from(next.has_p_torsion(p))
        })
        .collect();
    Ok(BettiVector::new(dims))
}

/// The two possible mod-3 cohomology types of a Bazaikin space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mod3Type {
    #[serde(rename = "CP2xS9")]
    Cp2xS9,
    #[serde(rename = "CP4xS5")]
    Cp4xS5,
}

impl Mod3Type {
    pub fn as_str(self) -> &'static str {
        match self {
            Mod3Type::Cp2xS9 => "CP2xS9",
            Mod3Type::Cp4xS5 => "CP4xS5",
        }
    }

    /// Betti vector of the model space.
    pub fn model_betti(self) -> BettiVector {
        let support: &[usize] = match self {
            Mod3Type::Cp2xS9 => &[0, 2, 4, 9, 11, 13],
            Mod3Type::Cp4xS5 => &[0, 2, 4, 5, 6, 7, 8, 9, 11, 13],
        };
        let mut dims = vec![0; TOP_DEGREE + 1];
        for &k in support {
            dims[k] = 1;
        }
        BettiVector::new(dims)
    }
}

pub fn mod3_type(q: &QTuple) -> Mod3Type {
    if h6_order(q).divisible_by_odd_prime(3) {
        Mod3Type::Cp4xS5
    } else {
        Mod3Type::Cp2xS9
    }
}

/// All canonical tuples with `max |q_i| <= bound` that are free and have
/// positive curvature, sorted ascending.
pub fn enumerate_spaces(bound: u64) -> Result<Vec<QTuple>> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let b = bound as i64;
    fn rec(pos: usize, hi: i64, lo: i64, q: &mut [i64; 5], out: &mut Vec<QTuple>) {
        if pos == 5 {
            let t = QTuple(*q);
            if t.is_canonical()
                && check_free(&t).verdict
                && check_curvature(&t) == Curvature::PositiveAll
            {
                out.push(t);
            }
            return;
        }
        let mut v = hi;
        while v >= lo {
            // only odd entries can be free
            if v.is_odd() {
                q[pos] = v;
                rec(pos + 1, v, lo, q, out);
            }
            v -= 1;
        }
    }
    // non-increasing tuples only; canonical forms are a subset of these.
    // Split on the leading entry and merge in sorted order.
    let mut out: Vec<QTuple> = (-b..=b)
        .into_par_iter()
        .filter(|v| v.is_odd())
        .flat_map_iter(|v| {
            let mut q = [v, 0, 0, 0, 0];
            let mut out = Vec::new();
            rec(1, v, -b, &mut q, &mut out);
            out
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Everything `bazaikin check` reports about one tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleReport {
    pub q: [i64; 5],
    pub free: bool,
    pub failing_pairs: Vec<FailingPair>,
    pub curvature: Curvature,
    pub e3: i64,
    pub m: String,
    pub m_integral: bool,
    pub mod3_type: Mod3Type,
}

pub fn tuple_report(q: &QTuple) -> TupleReport {
    let free = check_free(q);
    let m = h6_order(q);
    TupleReport {
        q: q.0,
        free: free.verdict,
        failing_pairs: free.failing_pairs,
        curvature: check_curvature(q),
        e3: m.e3,
        m: m.unreduced(),
        m_integral: m.integral,
        mod3_type: mod3_type(q),
    }
}
