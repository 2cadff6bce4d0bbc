//! Fixed-point component census and the feasibility predicates used
//! alongside it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::BettiVector;

/// Rational cohomology types a fixed-point component may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentType {
    S1,
    S3,
    S5,
    S7,
    CP2,
    CP1xS3,
    #[serde(rename = "CP1xS3#CP1xS3")]
    CP1xS3SumCP1xS3,
}

impl ComponentType {
    pub const ALL: [ComponentType; 7] = [
        ComponentType::S1,
        ComponentType::S3,
        ComponentType::S5,
        ComponentType::S7,
        ComponentType::CP2,
        ComponentType::CP1xS3,
        ComponentType::CP1xS3SumCP1xS3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ComponentType::S1 => "S1",
            ComponentType::S3 => "S3",
            ComponentType::S5 => "S5",
            ComponentType::S7 => "S7",
            ComponentType::CP2 => "CP2",
            ComponentType::CP1xS3 => "CP1xS3",
            ComponentType::CP1xS3SumCP1xS3 => "CP1xS3#CP1xS3",
        }
    }

    pub fn parse(label: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(label))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown component type `{label}`")))
    }

    pub fn dim(self) -> usize {
        match self {
            ComponentType::S1 => 1,
            ComponentType::S3 => 3,
            ComponentType::CP2 => 4,
            ComponentType::S5 | ComponentType::CP1xS3 | ComponentType::CP1xS3SumCP1xS3 => 5,
            ComponentType::S7 => 7,
        }
    }

    pub fn is_sphere(self) -> bool {
        matches!(
            self,
            ComponentType::S1 | ComponentType::S3 | ComponentType::S5 | ComponentType::S7
        )
    }

    pub fn betti(self) -> BettiVector {
        match self {
            ComponentType::S1 | ComponentType::S3 | ComponentType::S5 | ComponentType::S7 => {
                BettiVector::sphere(self.dim())
            }
            ComponentType::CP2 => BettiVector::new(vec![1, 0, 1, 0, 1]),
            ComponentType::CP1xS3 => BettiVector::new(vec![1, 0, 1, 1, 0, 1]),
            ComponentType::CP1xS3SumCP1xS3 => BettiVector::new(vec![1, 0, 2, 2, 0, 1]),
        }
    }

    /// Numbers of even- and odd-degree ring generators.
    pub fn generators(self) -> (u32, u32) {
        match self {
            ComponentType::S1 | ComponentType::S3 | ComponentType::S5 | ComponentType::S7 => (0, 1),
            ComponentType::CP2 => (1, 0),
            ComponentType::CP1xS3 => (1, 1),
            ComponentType::CP1xS3SumCP1xS3 => (2, 2),
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ring generators of the ambient rational type (a degree-2 class and a
/// degree-9 class).
pub const AMBIENT_GENERATORS: (u32, u32) = (1, 1);

/// A multiset of fixed-point components, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FixedPointProfile {
    components: Vec<ComponentType>,
}

impl FixedPointProfile {
    pub fn new(mut components: Vec<ComponentType>) -> Self {
        components.sort();
        FixedPointProfile { components }
    }

    pub fn components(&self) -> &[ComponentType] {
        &self.components
    }

    pub fn count(&self, c: ComponentType) -> usize {
        self.components.iter().filter(|&&x| x == c).count()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn betti(&self) -> BettiVector {
        self.components.iter().fold(BettiVector::empty(), |acc, c| {
            acc.disjoint_union(&c.betti())
        })
    }

    pub fn labels(&self) -> Vec<&'static str> {
        self.components.iter().map(|c| c.label()).collect()
    }
}

impl fmt::Display for FixedPointProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

/// Admissibility of a profile against a Betti budget: `b_0 = 1`, `b_1 = 0`
/// and duality per component, at most one `CP1xS3`, total Betti sum within
/// the budget, and, when the budget is attained, no component with more
/// generators than the ambient space.
pub fn profile_admissible(profile: &FixedPointProfile, budget: u64) -> bool {
    let per_component = profile.components.iter().all(|c| {
        let b = c.betti();
        b.get(0) == 1 && b.get(1) == 0 && b.is_poincare_dual(c.dim())
    });
    let total = profile.betti().total();
    let generators_ok = total < budget
        || profile.components.iter().all(|c| {
            let (e, o) = c.generators();
            e <= AMBIENT_GENERATORS.0 && o <= AMBIENT_GENERATORS.1
        });
    !profile.is_empty()
        && per_component
        && profile.count(ComponentType::CP1xS3) <= 1
        && total <= budget
        && generators_ok
}

/// All admissible profiles whose components have dimension `component_dim`,
/// ordered by number of non-sphere components, then size, then labels.
pub fn enumerate_profiles(budget: u64, component_dim: usize) -> Result<Vec<FixedPointProfile>> {
    if budget < 2 {
        return Err(Error::InvalidArgument(format!(
            "Betti budget {budget} is below 2"
        )));
    }
    if component_dim.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "component dimension {component_dim} is not odd"
        )));
    }
    let types: Vec<ComponentType> = ComponentType::ALL
        .into_iter()
        .filter(|c| c.dim() == component_dim)
        .collect();
    let mut out = Vec::new();
    // every component has b_0 = 1, so at most `budget` of them
    fn go(
        types: &[ComponentType],
        start: usize,
        current: &mut Vec<ComponentType>,
        total: u64,
        budget: u64,
        out: &mut Vec<FixedPointProfile>,
    ) {
        if !current.is_empty() {
            let p = FixedPointProfile::new(current.clone());
            if profile_admissible(&p, budget) {
                out.push(p);
            }
        }
        for (i, &c) in types.iter().enumerate().skip(start) {
            let t = total + c.betti().total();
            if t <= budget {
                current.push(c);
                go(types, i, current, t, budget, out);
                current.pop();
            }
        }
    }
    go(&types, 0, &mut Vec::new(), 0, budget, &mut out);
    out.sort_by_key(|p| {
        let non_sphere = p.components.iter().filter(|c| !c.is_sphere()).count();
        (non_sphere, p.len(), p.components.clone())
    });
    Ok(out)
}

/// Codimension bookkeeping for a torus fixed point: the codimension of the
/// fixed component must equal the sum over circles of the codimensions
/// inside each circle's fixed set.
pub fn borel_feasible(codim_total: i64, circle_codims: &[i64]) -> Result<bool> {
    for &c in std::iter::once(&codim_total).chain(circle_codims) {
        if c < 0 || c % 2 != 0 {
            return Err(Error::OddCodimension(c));
        }
    }
    Ok(circle_codims.iter().sum::<i64>() == codim_total)
}

/// Whether `total` is a sum (with repetition) of the allowed codimensions.
pub fn borel_decomposition_exists(total: i64, allowed_parts: &[i64]) -> Result<bool> {
    for &c in std::iter::once(&total).chain(allowed_parts) {
        if c < 0 || c % 2 != 0 {
            return Err(Error::OddCodimension(c));
        }
    }
    let n = total as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for s in 1..=n {
        reachable[s] = allowed_parts
            .iter()
            .any(|&p| p > 0 && p as usize <= s && reachable[s - p as usize]);
    }
    Ok(reachable[n])
}

/// Disjoint totally geodesic components must have dimension sum below the
/// ambient dimension.
pub fn frankel_compatible(component_dims: &[u64], ambient_dim: u64) -> bool {
    component_dims
        .iter()
        .enumerate()
        .all(|(i, &a)| component_dims[i + 1..].iter().all(|&b| a + b < ambient_dim))
}

/// Total Betti number of the fixed set is bounded by that of the manifold.
pub fn allday_bound_check(b_m: &BettiVector, b_f: &BettiVector) -> bool {
    b_f.total() <= b_m.total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ComponentType::*;

    fn labels(ps: &[FixedPointProfile]) -> Vec<Vec<&'static str>> {
        ps.iter().map(|p| p.labels()).collect()
    }

    #[test]
    fn census() {
        assert_eq!(
            labels(&enumerate_profiles(6, 5).unwrap()),
            vec![
                vec!["S5"],
                vec!["S5", "S5"],
                vec!["S5", "S5", "S5"],
                vec!["CP1xS3"],
                vec!["S5", "CP1xS3"],
            ]
        );
        assert_eq!(labels(&enumerate_profiles(2, 5).unwrap()), vec![vec!["S5"]]);
        assert_eq!(
            labels(&enumerate_profiles(4, 5).unwrap()),
            vec![vec!["S5"], vec!["S5", "S5"], vec!["CP1xS3"]]
        );
        assert!(enumerate_profiles(6, 4).is_err());
        assert!(enumerate_profiles(1, 5).is_err());
    }

    #[test]
    fn connected_sum_needs_slack() {
        let sum = FixedPointProfile::new(vec![CP1xS3SumCP1xS3]);
        assert!(!profile_admissible(&sum, 6));
        assert!(profile_admissible(&sum, 7));
        assert!(!profile_admissible(
            &FixedPointProfile::new(vec![CP1xS3, CP1xS3]),
            10
        ));
    }

    #[test]
    fn borel() {
        assert!(!borel_feasible(10, &[4, 4]).unwrap());
        assert!(borel_feasible(10, &[2, 4, 4]).unwrap());
        assert!(borel_feasible(0, &[]).unwrap());
        assert!(borel_feasible(10, &[3, 7]).is_err());
        assert!(!borel_decomposition_exists(10, &[4, 8]).unwrap());
        assert!(borel_decomposition_exists(10, &[2, 4]).unwrap());
    }

    #[test]
    fn frankel_and_allday() {
        assert!(!frankel_compatible(&[7, 7], 13));
        assert!(frankel_compatible(&[7, 5], 13));
        assert!(frankel_compatible(&[5, 5, 5], 13));
        let m = BettiVector::new(vec![1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1]);
        assert!(allday_bound_check(
            &m,
            &FixedPointProfile::new(vec![S5, CP1xS3]).betti()
        ));
        assert!(!allday_bound_check(&m, &BettiVector::new(vec![7])));
        assert!(allday_bound_check(&m, &BettiVector::empty()));
    }
}
