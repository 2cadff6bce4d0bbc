//! Case engine for the cyclic-index bound.
//!
//! Every arithmetic or group-theoretic fact the argument needs is a
//! [`Check`]: a call into another module together with its inputs. Walking
//! a scenario records each check with the value it produced, so a trace can
//! be replayed and compared. Geometric inputs that have no finite
//! verification are recorded as [`Axiom`] steps.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bazaikin::{self, CohomologyProfile, Mod3Type, QTuple};
use crate::cohomology::{
    borel_decomposition_exists, divisibility_obstruction, enumerate_profiles, frankel_compatible,
    integer_trace_set, lefschetz_value_set, smith_gysin_solve, surviving_indices, BettiVector,
    ComponentType, ExactSolution, FixedPointProfile, LefschetzSpec, QuotientGroup,
};
use crate::error::{Error, Result};
use crate::groups::{self, Pattern, Subgroup};
use crate::primes::is_prime;
use crate::serre;

/// Dimension of the manifolds in question.
pub const AMBIENT_DIM: u64 = 13;

/// Codimensions of totally geodesic submanifolds that cannot occur.
const EXCLUDED_CODIMS: [u64; 2] = [2, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CohomologyType {
    #[serde(rename = "rational")]
    RationalBazaikin,
    #[serde(rename = "mod3")]
    Mod3Bazaikin,
}

impl CohomologyType {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rational" => Ok(CohomologyType::RationalBazaikin),
            "mod3" => Ok(CohomologyType::Mod3Bazaikin),
            _ => Err(Error::InvalidArgument(format!(
                "unknown cohomology type `{s}` (expected rational or mod3)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioInput {
    pub symmetry_rank: u32,
    pub cohomology: CohomologyType,
    /// A specific Bazaikin space, when known. Only its mod-3 type matters.
    pub q: Option<QTuple>,
}

impl ScenarioInput {
    pub fn new(symmetry_rank: u32, cohomology: CohomologyType) -> Self {
        ScenarioInput {
            symmetry_rank,
            cohomology,
            q: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=3).contains(&self.symmetry_rank) {
            return Err(Error::InvalidArgument(format!(
                "symmetry rank {} is not 2 or 3",
                self.symmetry_rank
            )));
        }
        if let Some(q) = &self.q {
            if !bazaikin::check_free(q).verdict {
                return Err(Error::NotFree(q.0));
            }
        }
        Ok(())
    }

    /// Total mod-3 Betti number of the universal cover.
    fn mod3_budget(&self) -> u64 {
        let ty = self
            .q
            .as_ref()
            .map_or(Mod3Type::Cp4xS5, bazaikin::mod3_type);
        ty.model_betti().total()
    }
}

/// Geometric theorems used without a finite check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    ConnectednessLemma,
    BergerSugahara,
    Frankel,
    Weinstein,
    Smith,
    DavisWeinberger,
    CodimensionTwo,
    RongIsotropy,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::ConnectednessLemma,
        Axiom::BergerSugahara,
        Axiom::Frankel,
        Axiom::Weinstein,
        Axiom::Smith,
        Axiom::DavisWeinberger,
        Axiom::CodimensionTwo,
        Axiom::RongIsotropy,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::ConnectednessLemma => {
                "a closed totally geodesic codimension-k submanifold of a positively curved n-manifold is (n-2k+1)-connected; here no totally geodesic submanifold of codimension 2 or 4 exists"
            }
            Axiom::BergerSugahara => {
                "an isometric torus action on a closed odd-dimensional positively curved manifold has a codimension-one subtorus with a fixed point"
            }
            Axiom::Frankel => {
                "compact totally geodesic submanifolds whose dimensions sum to at least the ambient dimension intersect"
            }
            Axiom::Weinstein => {
                "the deck group acts trivially on the rational cohomology of an invariant fixed rational 5-sphere"
            }
            Axiom::Smith => "Z_p x Z_p cannot act freely on a mod p cohomology sphere",
            Axiom::DavisWeinberger => {
                "a finite group acting freely and homologically trivially on such a (4k+1)-manifold is a cyclic 2-group times a group of odd order"
            }
            Axiom::CodimensionTwo => {
                "a finite group acting freely on a positively curved manifold and on a totally geodesic codimension-two submanifold is cyclic"
            }
            Axiom::RongIsotropy => {
                "a circle action without nontrivial finite isotropy forces a cyclic fundamental group, and isometries commuting with a circle action preserve a circle orbit"
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("string tag"))
    }
}

/// One replayable step: an operation of another module, or an axiom.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "operation", content = "inputs", rename_all = "snake_case")]
pub enum Check {
    Axiom {
        axiom: Axiom,
    },
    /// Components of a fixed set are bounded by the even Betti sum.
    ComponentBound {
        betti: BettiVector,
    },
    /// Index of the subgroup acting trivially on cohomology with all
    /// dimensions at most one: the number of finite-order automorphisms of `Q`.
    TrivialActionIndex {
        betti: BettiVector,
    },
    BorelDecomposition {
        total: i64,
        parts: Vec<i64>,
    },
    ProfileCensus {
        budget: u64,
        dim: usize,
    },
    SmithGysin {
        space: BettiVector,
        fixed: BettiVector,
        dim: usize,
    },
    LefschetzValues {
        spec: LefschetzSpec,
    },
    /// Odd indices `d` of a normal cyclic subgroup not excluded by
    /// divisibility.
    CyclicIndices {
        lefschetz: Vec<i64>,
    },
    /// Odd primes `p` for which `Z_p x Z_p` is not excluded.
    ElementaryAbelianPrimes {
        lefschetz: Vec<i64>,
    },
    /// Looks for a normal order-3 subgroup that is maximal cyclic and tests
    /// the quotient order against the Lefschetz values.
    NormalOrderThree {
        pattern: Pattern,
        lefschetz: Vec<i64>,
    },
    NormalRank {
        pattern: Pattern,
        p: u64,
    },
    ContainsCopy {
        group: Pattern,
        pattern: Pattern,
    },
    Frankel {
        dims: Vec<u64>,
        ambient: u64,
    },
    /// Mod-3 Betti vectors `(1,0,a,a,0,1)` the smallest of `components`
    /// five-dimensional fixed components can have within `budget`.
    Mod3Census {
        budget: u64,
        components: u64,
    },
    SpectralVerdict {
        p: u64,
    },
    IndexProducts {
        factors: Vec<Vec<u64>>,
    },
    IndexUnion {
        sets: Vec<Vec<u64>>,
    },
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn decode<T: DeserializeOwned>(v: Value) -> T {
    serde_json::from_value(v).expect("check output has the recorded shape")
}

fn max_abs(values: &[i64]) -> Result<u64> {
    if values.contains(&0) {
        return Err(Error::InvalidArgument(
            "a zero Lefschetz value allows every index".into(),
        ));
    }
    Ok(values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0))
}

impl Check {
    pub fn name(&self) -> String {
        match to_value(self) {
            Value::Object(m) => m["operation"].as_str().unwrap_or_default().to_string(),
            _ => unreachable!("tagged enum"),
        }
    }

    /// Runs the underlying operation.
    pub fn evaluate(&self) -> Result<Value> {
        Ok(match self {
            Check::Axiom { .. } => json!("assumed"),
            Check::ComponentBound { betti } => {
                to_value(betti.dims().iter().step_by(2).sum::<u64>())
            }
            Check::TrivialActionIndex { betti } => {
                if let Some((degree, &dim)) = betti.dims().iter().enumerate().find(|(_, &d)| d > 1)
                {
                    return Err(Error::DimensionTooLarge { degree, dim });
                }
                to_value(integer_trace_set(1, false)?.len())
            }
            Check::BorelDecomposition { total, parts } => {
                to_value(borel_decomposition_exists(*total, parts)?)
            }
            Check::ProfileCensus { budget, dim } => to_value(enumerate_profiles(*budget, *dim)?),
            Check::SmithGysin { space, fixed, dim } => {
                to_value(smith_gysin_solve(space, fixed, *dim))
            }
            Check::LefschetzValues { spec } => to_value(lefschetz_value_set(spec)?),
            Check::CyclicIndices { lefschetz } => {
                let max = max_abs(lefschetz)?;
                let odd: Vec<u64> = (1..=max).step_by(2).collect();
                to_value(surviving_indices(
                    &odd,
                    &lefschetz.iter().copied().collect(),
                ))
            }
            Check::ElementaryAbelianPrimes { lefschetz } => {
                let max = max_abs(lefschetz)?;
                let values = lefschetz.iter().copied().collect();
                let mut out = Vec::new();
                for p in (3..=max).step_by(2).filter(|&p| is_prime(p)) {
                    if !divisibility_obstruction(QuotientGroup::ElementaryAbelian(p), &values)?
                        .is_excluded()
                    {
                        out.push(p);
                    }
                }
                to_value(out)
            }
            Check::NormalOrderThree { pattern, lefschetz } => {
                let g = pattern.build()?;
                let found = g.elements().find(|&x| {
                    g.element_order(x) == 3 && {
                        let h = Subgroup::generated(&g, &[x]);
                        h.is_normal() && h.is_maximal_cyclic()
                    }
                });
                match found {
                    Some(_) => {
                        let quotient = g.order() as u64 / 3;
                        let verdict = divisibility_obstruction(
                            QuotientGroup::CyclicIndex(quotient),
                            &lefschetz.iter().copied().collect(),
                        )?;
                        json!({"found": true, "quotient": quotient, "excluded": verdict.is_excluded()})
                    }
                    None => json!({"found": false, "quotient": null, "excluded": false}),
                }
            }
            Check::NormalRank { pattern, p } => {
                to_value(groups::normal_rank(&pattern.build()?, *p)?)
            }
            Check::ContainsCopy { group, pattern } => {
                to_value(groups::contains_copy(&group.build()?, *pattern)?)
            }
            Check::Frankel { dims, ambient } => to_value(frankel_compatible(dims, *ambient)),
            Check::Mod3Census { budget, components } => {
                if *components == 0 {
                    return Err(Error::InvalidArgument("no components".into()));
                }
                // the smallest component has at most budget / components classes
                let room = budget / components;
                let out: Vec<BettiVector> = (0..)
                    .take_while(|a| 2 + 2 * a <= room)
                    .map(|a| BettiVector::new(vec![1, 0, a, a, 0, 1]))
                    .collect();
                to_value(out)
            }
            Check::SpectralVerdict { p } => {
                let r = serre::exhaustive_verdict(*p)?;
                json!({
                    "verdict": r.verdict,
                    "choices": r.choices_examined.to_string(),
                    "min_deg6_survivors": r.min_deg6_survivors,
                })
            }
            Check::IndexProducts { factors } => {
                let mut acc = BTreeSet::from([1u64]);
                for f in factors {
                    acc = acc
                        .iter()
                        .flat_map(|a| f.iter().map(move |b| a * b))
                        .collect();
                }
                to_value(acc)
            }
            Check::IndexUnion { sets } => {
                to_value(sets.iter().flatten().copied().collect::<BTreeSet<u64>>())
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub tag: String,
    #[serde(flatten)]
    pub check: Check,
    pub verdict: Value,
}

impl TraceStep {
    /// Re-executes the operation and compares with the recorded verdict.
    pub fn replay(&self) -> Result<bool> {
        Ok(self.check.evaluate()? == self.verdict)
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.check {
            Check::Axiom { axiom } => {
                write!(f, "[{}] axiom {}: {}", self.tag, axiom, axiom.statement())
            }
            check => {
                let inputs = match to_value(check) {
                    Value::Object(m) => m.get("inputs").cloned().unwrap_or(Value::Null),
                    _ => Value::Null,
                };
                write!(
                    f,
                    "[{}] {} {} => {}",
                    self.tag,
                    check.name(),
                    inputs,
                    self.verdict
                )
            }
        }
    }
}

/// Ordered list of steps, filled while walking the case tree.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace(pub Vec<TraceStep>);

impl Trace {
    fn run(&mut self, tag: &str, check: Check) -> Result<Value> {
        let verdict = check.evaluate()?;
        self.0.push(TraceStep {
            tag: tag.to_string(),
            check,
            verdict: verdict.clone(),
        });
        Ok(verdict)
    }

    fn get<T: DeserializeOwned>(&mut self, tag: &str, check: Check) -> Result<T> {
        Ok(decode(self.run(tag, check)?))
    }

    fn axiom(&mut self, tag: &str, axiom: Axiom) {
        self.0.push(TraceStep {
            tag: tag.to_string(),
            check: Check::Axiom { axiom },
            verdict: json!("assumed"),
        });
    }

    fn require(&mut self, tag: &str, check: Check, expected: bool) -> Result<()> {
        let got: bool = self.get(tag, check)?;
        if got != expected {
            return Err(Error::StepFailed(format!("{tag}: expected {expected}")));
        }
        Ok(())
    }

    fn axioms(&self) -> Vec<Axiom> {
        let set: BTreeSet<Axiom> = self
            .0
            .iter()
            .filter_map(|s| match s.check {
                Check::Axiom { axiom } => Some(axiom),
                _ => None,
            })
            .collect();
        set.into_iter().collect()
    }
}

/// Index set of one branch together with the steps that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Branch {
    pub indices: BTreeSet<u64>,
    pub trace: Trace,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub scenario: ScenarioInput,
    pub index_bound_set: BTreeSet<u64>,
    pub case_trace: Trace,
    pub axioms_used: Vec<Axiom>,
}

impl ObstructionReport {
    /// The trace as ordered prose lines.
    pub fn explain(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.case_trace.0.iter().map(|s| s.to_string()).collect();
        let set: Vec<String> = self.index_bound_set.iter().map(u64::to_string).collect();
        lines.push(format!(
            "[conclusion] the fundamental group has a cyclic subgroup of index in {{{}}}",
            set.join(", ")
        ));
        lines.push(
            "[cited] symmetry rank 1: Rong's bound on the index of a cyclic subgroup applies; not computed here".into(),
        );
        lines.push(
            "[cited] symmetry rank at least 4: the fundamental group is cyclic (Frank-Rong-Wang); not computed here".into(),
        );
        lines
    }

    /// Replays every step; returns the tags of steps that disagree.
    pub fn replay(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for step in &self.case_trace.0 {
            if !step.replay()? {
                bad.push(step.tag.clone());
            }
        }
        Ok(bad)
    }
}

fn ambient_rational() -> Result<BettiVector> {
    Ok(bazaikin::rational_betti(
        &CohomologyProfile::from_torsion_order(1)?,
    ))
}

fn sorted(s: &BTreeSet<u64>) -> Vec<u64> {
    s.iter().copied().collect()
}

/// The unique Smith-Gysin solution for a fixed-point-free circle action.
fn quotient_cohomology(
    t: &mut Trace,
    tag: &str,
    component: ComponentType,
) -> Result<ExactSolution> {
    let sols: Vec<ExactSolution> = t.get(
        tag,
        Check::SmithGysin {
            space: component.betti(),
            fixed: BettiVector::empty(),
            dim: component.dim(),
        },
    )?;
    match <[ExactSolution; 1]>::try_from(sols) {
        Ok([s]) => Ok(s),
        Err(v) => Err(Error::StepFailed(format!(
            "{tag}: expected one exact solution, found {}",
            v.len()
        ))),
    }
}

/// Divisibility consequences of a Lefschetz set: surviving odd cyclic
/// indices and the odd primes `p` with `Z_p x Z_p` still possible.
fn divisibility(t: &mut Trace, tag: &str, r: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
    let lef: Vec<i64> = t.get(
        tag,
        Check::LefschetzValues {
            spec: LefschetzSpec {
                dims: r.to_vec(),
                odd_order: true,
            },
        },
    )?;
    let primes: Vec<u64> = t.get(
        tag,
        Check::ElementaryAbelianPrimes {
            lefschetz: lef.clone(),
        },
    )?;
    let ds: Vec<u64> = t.get(tag, Check::CyclicIndices { lefschetz: lef })?;
    Ok((ds, primes))
}

/// The torus has a fixed point: the index is at most the number of torus
/// fixed components.
fn fixed_point_case(t: &mut Trace, ambient: &BettiVector) -> Result<BTreeSet<u64>> {
    let tag = "torus fixed point";
    let comps: u64 = t.get(
        tag,
        Check::ComponentBound {
            betti: ambient.clone(),
        },
    )?;
    // one-dimensional fixed component: its stabilizer acts freely on a circle
    // a codimension-two step inside a circle fixed set
    t.axiom(tag, Axiom::CodimensionTwo);
    // otherwise every circle fixed set through the point has dimension 7
    // and the torus component has codimension 4 in each of them
    t.axiom(tag, Axiom::ConnectednessLemma);
    let max_circle = AMBIENT_DIM - EXCLUDED_CODIMS.iter().sum::<u64>();
    let step = EXCLUDED_CODIMS
        .iter()
        .copied()
        .find(|&c| c > 2)
        .unwrap_or(4);
    let torus_dim = max_circle - step;
    t.require(
        tag,
        Check::BorelDecomposition {
            total: (AMBIENT_DIM - torus_dim) as i64,
            parts: vec![step as i64],
        },
        false,
    )?;
    Ok(decode(t.run(
        tag,
        Check::IndexProducts {
            factors: vec![(1..=comps).collect()],
        },
    )?))
}

/// A circle fixed set with a component of dimension 1 or 3.
fn low_dim_case(t: &mut Trace, ambient: &BettiVector) -> Result<BTreeSet<u64>> {
    let tag = "fixed component of dimension 1 or 3";
    let trivial: u64 = t.get(
        tag,
        Check::TrivialActionIndex {
            betti: ambient.clone(),
        },
    )?;
    t.axiom(tag, Axiom::DavisWeinberger);
    let comps: u64 = t.get(
        tag,
        Check::ComponentBound {
            betti: ambient.clone(),
        },
    )?;
    // the odd part permutes the components, so its orbit size is odd
    let orbit: Vec<u64> = (1..=comps).filter(|k| k % 2 == 1).collect();
    // a 1-dimensional component is a circle and its stabilizer is cyclic;
    // a 3-dimensional one carries a circle action without fixed points
    t.axiom(tag, Axiom::BergerSugahara);
    let sol = quotient_cohomology(t, tag, ComponentType::S3)?;
    let (ds, primes) = divisibility(t, tag, &sol.r)?;
    if !primes.is_empty() {
        return Err(Error::StepFailed(format!(
            "{tag}: Z_p x Z_p not excluded for {primes:?}"
        )));
    }
    t.get(
        tag,
        Check::IndexProducts {
            factors: vec![(1..=trivial).collect(), orbit, ds],
        },
    )
}

/// The odd part when the stabilized component is a rational 5-sphere,
/// before accounting for the orbit of the component.
fn sphere_odd_part(t: &mut Trace, tag: &str) -> Result<Vec<u64>> {
    t.axiom(tag, Axiom::Weinstein);
    t.axiom(tag, Axiom::DavisWeinberger);
    let sol = quotient_cohomology(t, tag, ComponentType::S5)?;
    let lef: Vec<i64> = t.get(
        tag,
        Check::LefschetzValues {
            spec: LefschetzSpec {
                dims: sol.r.clone(),
                odd_order: true,
            },
        },
    )?;
    let primes: Vec<u64> = t.get(
        tag,
        Check::ElementaryAbelianPrimes {
            lefschetz: lef.clone(),
        },
    )?;
    let mut sylow_factor = vec![1u64];
    for &p in &primes {
        if p != 3 {
            return Err(Error::StepFailed(format!(
                "{tag}: Z{p} x Z{p} not excluded"
            )));
        }
        // the Sylow 3-subgroup avoids these three groups
        let excluded = [Pattern::Z3Cubed, Pattern::U33, Pattern::Z9xZ3];
        for pattern in excluded {
            let v = t.run(
                tag,
                Check::NormalOrderThree {
                    pattern,
                    lefschetz: lef.clone(),
                },
            )?;
            if v["excluded"] != json!(true) {
                return Err(Error::StepFailed(format!("{tag}: {pattern} not excluded")));
            }
        }
        // what is left is cyclic, Z3xZ3 or Z9semiZ3; the last two have a
        // normal 3-complement and an index-3 subgroup with cyclic Sylows
        for group in [Pattern::ZpxZp(3), Pattern::Z9SemiZ3] {
            for pattern in excluded {
                t.require(tag, Check::ContainsCopy { group, pattern }, false)?;
            }
            let rank: u32 = t.get(
                tag,
                Check::NormalRank {
                    pattern: group,
                    p: 3,
                },
            )?;
            if rank > 2 {
                return Err(Error::StepFailed(format!(
                    "{tag}: normal rank of {group} is {rank}"
                )));
            }
        }
        sylow_factor.push(3);
    }
    let ds: Vec<u64> = t.get(tag, Check::CyclicIndices { lefschetz: lef })?;
    let set: BTreeSet<u64> = t.get(
        tag,
        Check::IndexProducts {
            factors: vec![sylow_factor, ds],
        },
    )?;
    Ok(sorted(&set))
}

/// Index set for one profile of a five-dimensional circle fixed set.
pub fn five_dim_branch(profile: &FixedPointProfile) -> Result<Branch> {
    let tag = "five-dimensional fixed set";
    let mut t = Trace::default();
    let ambient = ambient_rational()?;
    let census: Vec<FixedPointProfile> = t.get(
        tag,
        Check::ProfileCensus {
            budget: ambient.total(),
            dim: 5,
        },
    )?;
    if !census.contains(profile) {
        return Err(Error::UnsupportedProfile(profile.to_string()));
    }
    let indices = if profile.count(ComponentType::CP1xS3) > 0 {
        let tag = "five-dimensional fixed set: CP1xS3 component";
        let trivial: u64 = t.get(tag, Check::TrivialActionIndex { betti: ambient })?;
        t.axiom(tag, Axiom::DavisWeinberger);
        // the odd part preserves the unique CP1xS3 component, on which some
        // circle acts without fixed points
        t.axiom(tag, Axiom::BergerSugahara);
        let sol = quotient_cohomology(&mut t, tag, ComponentType::CP1xS3)?;
        let (ds, primes) = divisibility(&mut t, tag, &sol.r)?;
        if !primes.is_empty() {
            return Err(Error::StepFailed(format!(
                "{tag}: Z_p x Z_p not excluded for {primes:?}"
            )));
        }
        t.get(
            tag,
            Check::IndexProducts {
                factors: vec![(1..=trivial).collect(), ds],
            },
        )?
    } else {
        let k = profile.len() as u64;
        let tag = "five-dimensional fixed set: rational 5-spheres";
        let odd = sphere_odd_part(&mut t, tag)?;
        t.get(
            tag,
            Check::IndexProducts {
                factors: vec![(1..=k).collect(), odd],
            },
        )?
    };
    Ok(Branch { indices, trace: t })
}

/// The mod-3 refinement for two or three rational 5-sphere components.
pub fn mod3_branch(profile: &FixedPointProfile, mod3_budget: u64) -> Result<Branch> {
    let tag = "mod 3 refinement";
    let k = profile.len() as u64;
    if !(2..=3).contains(&k) || profile.count(ComponentType::S5) as u64 != k {
        return Err(Error::UnsupportedProfile(profile.to_string()));
    }
    let mut t = Trace::default();
    // the Z_3 fixed components agree with the circle fixed components
    t.axiom(tag, Axiom::ConnectednessLemma);
    t.axiom(tag, Axiom::CodimensionTwo);
    let types: Vec<BettiVector> = t.get(
        tag,
        Check::Mod3Census {
            budget: mod3_budget,
            components: k,
        },
    )?;
    t.axiom(tag, Axiom::DavisWeinberger);
    let sol = quotient_cohomology(&mut t, tag, ComponentType::S5)?;
    let (ds, primes) = divisibility(&mut t, tag, &sol.r)?;
    if primes.iter().any(|&p| p != 3) {
        return Err(Error::StepFailed(format!(
            "{tag}: Z_p x Z_p not excluded for {primes:?}"
        )));
    }
    // Z3 x Z3 cannot act freely on the chosen component
    for ty in &types {
        match ty.get(2) {
            0 => t.axiom(tag, Axiom::Smith),
            1 => {
                let v = t.run(tag, Check::SpectralVerdict { p: 3 })?;
                if v["verdict"] != json!(true) {
                    return Err(Error::StepFailed(format!(
                        "{tag}: free Z3 x Z3 action not excluded"
                    )));
                }
            }
            _ => {
                return Err(Error::StepFailed(format!(
                    "{tag}: no argument for a component with mod-3 Betti numbers {ty}"
                )))
            }
        }
    }
    let indices = t.get(
        tag,
        Check::IndexProducts {
            factors: vec![(1..=k).collect(), ds],
        },
    )?;
    Ok(Branch { indices, trace: t })
}

/// A seven-dimensional circle fixed set.
fn seven_dim_case(
    t: &mut Trace,
    ambient: &BettiVector,
    fixed_point: &BTreeSet<u64>,
    low: &BTreeSet<u64>,
    five: &BTreeSet<u64>,
) -> Result<BTreeSet<u64>> {
    let tag = "seven-dimensional fixed set";
    t.axiom(tag, Axiom::Frankel);
    t.require(
        tag,
        Check::Frankel {
            dims: vec![7, 7],
            ambient: AMBIENT_DIM,
        },
        false,
    )?;
    // b_2 = 1 by connectedness, so with duality the component carries at
    // least four classes; any other component fits in what is left
    t.axiom(tag, Axiom::ConnectednessLemma);
    let seven = BettiVector::new(vec![1, 0, 1, 0, 0, 1, 0, 1]);
    let rest = ambient.total() - seven.total();
    for dim in [1, 3, 5] {
        let census: Vec<FixedPointProfile> =
            t.get(tag, Check::ProfileCensus { budget: rest, dim })?;
        for p in census {
            if p.len() != 1 || !p.components()[0].is_sphere() {
                return Err(Error::StepFailed(format!(
                    "{tag}: unexpected extra component {p}"
                )));
            }
        }
    }
    // another component is a rational sphere of dimension 1, 3 or 5
    let mut sphere = Trace::default();
    let odd = sphere_odd_part(&mut sphere, "seven-dimensional fixed set: extra 5-sphere")?;
    t.0.extend(sphere.0);
    let disconnected: BTreeSet<u64> = t.get(
        tag,
        Check::IndexUnion {
            sets: vec![sorted(low), odd],
        },
    )?;
    // connected: cyclic, a torus fixed point, or another circle whose
    // fixed set has dimension at most 5
    t.axiom(tag, Axiom::RongIsotropy);
    t.get(
        tag,
        Check::IndexUnion {
            sets: vec![
                vec![1],
                sorted(&disconnected),
                sorted(fixed_point),
                sorted(low),
                sorted(five),
            ],
        },
    )
}

/// Walks the whole case tree for a scenario.
pub fn index_bound_report(s: &ScenarioInput) -> Result<ObstructionReport> {
    s.validate()?;
    let ambient = ambient_rational()?;
    let mut t = Trace::default();
    t.axiom("symmetry", Axiom::BergerSugahara);
    let index_bound_set = if s.symmetry_rank == 3 {
        // some 2-torus inside the 3-torus has a fixed point
        fixed_point_case(&mut t, &ambient)?
    } else {
        let fixed_point = fixed_point_case(&mut t, &ambient)?;
        let low = low_dim_case(&mut t, &ambient)?;
        let census: Vec<FixedPointProfile> = t.get(
            "five-dimensional fixed set",
            Check::ProfileCensus {
                budget: ambient.total(),
                dim: 5,
            },
        )?;
        let mut five = BTreeSet::new();
        for profile in &census {
            let only_spheres = profile.count(ComponentType::S5) == profile.len();
            let branch = if s.cohomology == CohomologyType::Mod3Bazaikin
                && only_spheres
                && profile.len() >= 2
            {
                mod3_branch(profile, s.mod3_budget())?
            } else {
                five_dim_branch(profile)?
            };
            t.0.extend(branch.trace.0);
            five.extend(branch.indices);
        }
        let seven = seven_dim_case(&mut t, &ambient, &fixed_point, &low, &five)?;
        t.get(
            "conclusion",
            Check::IndexUnion {
                sets: vec![
                    sorted(&fixed_point),
                    sorted(&low),
                    sorted(&five),
                    sorted(&seven),
                ],
            },
        )?
    };
    if index_bound_set.is_empty() {
        return Err(Error::StepFailed("empty index set".into()));
    }
    let axioms_used = t.axioms();
    Ok(ObstructionReport {
        scenario: s.clone(),
        index_bound_set,
        case_trace: t,
        axioms_used,
    })
}
