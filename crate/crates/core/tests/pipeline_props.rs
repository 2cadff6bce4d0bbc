use std::collections::BTreeSet;

use pcurv13::bazaikin::{enumerate_spaces, QTuple};
use pcurv13::cohomology::{enumerate_profiles, ComponentType, FixedPointProfile};
use pcurv13::pipeline::{
    five_dim_branch, index_bound_report, mod3_branch, Axiom, Check, CohomologyType,
    ObstructionReport, ScenarioInput,
};
use proptest::prelude::*;
use serde_json::json;

const OPERATIONS: [&str; 17] = [
    "axiom",
    "component_bound",
    "trivial_action_index",
    "borel_decomposition",
    "profile_census",
    "smith_gysin",
    "lefschetz_values",
    "cyclic_indices",
    "elementary_abelian_primes",
    "normal_order_three",
    "normal_rank",
    "contains_copy",
    "frankel",
    "mod3_census",
    "spectral_verdict",
    "index_products",
    "index_union",
];

fn report(rank: u32, ty: CohomologyType, q: Option<QTuple>) -> ObstructionReport {
    let mut s = ScenarioInput::new(rank, ty);
    s.q = q;
    index_bound_report(&s).unwrap()
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

fn divisors_of_18_and_27() -> BTreeSet<u64> {
    (1..=27).filter(|d| 18 % d == 0 || *d == 27).collect()
}

#[test]
fn scenario_bounds() {
    use CohomologyType::*;
    assert_eq!(
        report(2, RationalBazaikin, None).index_bound_set,
        divisors_of_18_and_27()
    );
    assert_eq!(
        report(2, Mod3Bazaikin, None).index_bound_set,
        set(&[1, 2, 3, 6, 9])
    );
    assert_eq!(
        report(3, RationalBazaikin, None).index_bound_set,
        set(&[1, 2, 3])
    );
    assert_eq!(
        report(3, Mod3Bazaikin, None).index_bound_set,
        set(&[1, 2, 3])
    );
}

#[test]
fn every_step_replays_and_is_named() {
    for rank in [2, 3] {
        for ty in [
            CohomologyType::RationalBazaikin,
            CohomologyType::Mod3Bazaikin,
        ] {
            let r = report(rank, ty, None);
            assert!(!r.index_bound_set.is_empty());
            assert_eq!(r.replay().unwrap(), Vec::<String>::new());
            for step in &r.case_trace.0 {
                assert!(
                    OPERATIONS.contains(&step.check.name().as_str()),
                    "{}",
                    step.check.name()
                );
                assert!(!step.tag.is_empty());
            }
        }
    }
}

#[test]
fn axioms_are_declared() {
    let declared: BTreeSet<Axiom> = Axiom::ALL.into_iter().collect();
    for ty in [
        CohomologyType::RationalBazaikin,
        CohomologyType::Mod3Bazaikin,
    ] {
        let two = report(2, ty, None);
        let used: BTreeSet<Axiom> = two.axioms_used.iter().copied().collect();
        // all geometric input of the rank-2 tree, except the rank-1 citation
        let mut expect = declared.clone();
        expect.remove(&Axiom::RongIsotropy);
        if ty == CohomologyType::RationalBazaikin {
            expect.remove(&Axiom::Smith);
        }
        assert!(used.is_subset(&declared));
        assert!(expect.is_subset(&used), "{ty:?}: {used:?}");
        let three = report(3, ty, None);
        assert!(three.axioms_used.iter().all(|a| used.contains(a)));
        // axioms listed are exactly those in the trace
        let in_trace: BTreeSet<Axiom> = two
            .case_trace
            .0
            .iter()
            .filter_map(|s| match s.check {
                Check::Axiom { axiom } => Some(axiom),
                _ => None,
            })
            .collect();
        assert_eq!(in_trace, used);
    }
}

#[test]
fn tampered_steps_fail_replay() {
    let mut r = report(2, CohomologyType::RationalBazaikin, None);
    let i = r
        .case_trace
        .0
        .iter()
        .position(|s| s.check.name() == "cyclic_indices")
        .unwrap();
    r.case_trace.0[i].verdict = json!([1, 2, 3, 4, 5]);
    assert_eq!(r.replay().unwrap().len(), 1);
}

#[test]
fn report_json_round_trips() {
    let r = report(2, CohomologyType::Mod3Bazaikin, None);
    let text = serde_json::to_string(&r).unwrap();
    let back: ObstructionReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert!(back.replay().unwrap().is_empty());
    assert_eq!(
        serde_json::to_string(&report(2, CohomologyType::Mod3Bazaikin, None)).unwrap(),
        text
    );
}

#[test]
fn divisibility_is_recomputed_in_branches() {
    let cs = five_dim_branch(&FixedPointProfile::new(vec![ComponentType::CP1xS3])).unwrap();
    let step = cs
        .trace
        .0
        .iter()
        .find(|s| s.check.name() == "cyclic_indices")
        .unwrap();
    assert_eq!(
        step.check,
        Check::CyclicIndices {
            lefschetz: vec![1, 4]
        }
    );
    assert_eq!(step.verdict, json!([1]));
    assert_eq!(step.check.evaluate().unwrap(), json!([1]));

    let s5 = five_dim_branch(&FixedPointProfile::new(vec![ComponentType::S5])).unwrap();
    let step = s5
        .trace
        .0
        .iter()
        .find(|s| s.check.name() == "cyclic_indices")
        .unwrap();
    assert_eq!(step.check, Check::CyclicIndices { lefschetz: vec![3] });
    assert_eq!(step.check.evaluate().unwrap(), json!([1, 3]));
}

#[test]
fn branch_bounds() {
    use ComponentType::{CP1xS3, S5};
    let branch =
        |c: Vec<ComponentType>| five_dim_branch(&FixedPointProfile::new(c)).unwrap().indices;
    assert_eq!(branch(vec![S5]), set(&[1, 3, 9]));
    assert_eq!(branch(vec![S5, S5]), set(&[1, 2, 3, 6, 9, 18]));
    assert!(branch(vec![S5, S5, S5])
        .iter()
        .all(|d| 18 % d == 0 || *d == 27));
    assert_eq!(branch(vec![CP1xS3]), set(&[1, 2]));
    assert_eq!(branch(vec![S5, CP1xS3]), set(&[1, 2]));

    let m3 = |c: Vec<ComponentType>| mod3_branch(&FixedPointProfile::new(c), 10);
    assert_eq!(m3(vec![S5, S5]).unwrap().indices, set(&[1, 2, 3, 6]));
    assert_eq!(m3(vec![S5, S5, S5]).unwrap().indices, set(&[1, 2, 3, 6, 9]));
    assert!(m3(vec![CP1xS3]).is_err());
    assert!(m3(vec![S5]).is_err());

    // every census profile is handled
    for p in enumerate_profiles(6, 5).unwrap() {
        assert!(five_dim_branch(&p).is_ok(), "{p}");
    }
}

#[test]
fn invalid_scenarios() {
    for rank in [0, 1, 4, 5] {
        assert!(
            index_bound_report(&ScenarioInput::new(rank, CohomologyType::RationalBazaikin))
                .is_err()
        );
    }
    let mut s = ScenarioInput::new(2, CohomologyType::RationalBazaikin);
    s.q = Some(QTuple::new([1, 1, 1, 1, 2]));
    assert!(index_bound_report(&s).is_err());
    assert!(CohomologyType::parse("integral").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn mod3_bounds_refine_rational(idx in any::<prop::sample::Index>()) {
        let spaces = enumerate_spaces(9).unwrap();
        let q = *idx.get(&spaces);
        let rational = report(2, CohomologyType::RationalBazaikin, Some(q));
        let mod3 = report(2, CohomologyType::Mod3Bazaikin, Some(q));
        let three = report(3, CohomologyType::Mod3Bazaikin, Some(q));
        prop_assert!(mod3.index_bound_set.is_subset(&rational.index_bound_set));
        prop_assert!(three.index_bound_set.is_subset(&mod3.index_bound_set));
        prop_assert_eq!(&rational.index_bound_set, &divisors_of_18_and_27());
        prop_assert!(mod3.replay().unwrap().is_empty());
    }
}
