//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pcurv13::bazaikin::{check_free, e3, mod_p_betti, CohomologyProfile, QTuple};
use pcurv13::cohomology::{
    enumerate_profiles, integer_trace_set, lefschetz_value_set, smith_gysin_solve, BettiVector,
    ComponentType, LefschetzSpec,
};
use pcurv13::groups::{
    abelian, abelian_groups_of_order, all_sylow_cyclic, build_burnside, build_standard,
    classify_order_27, normal_rank, p2_condition, u33, z9_semi_z3, BurnsideParams, GroupTable,
};
use pcurv13::pipeline::{
    five_dim_branch, index_bound_report, Check, CohomologyType, ScenarioInput,
};
use pcurv13::primes::prime_divisors;
use pcurv13::serre::{bg_dims, exhaustive_verdict};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde_json::json;

type Failure = Box<dyn std::error::Error>;
type Outcome = Result<String, Failure>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(msg.into().into())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn all_permutations() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    for e in 0..5 {
                        let p = [a, b, c, d, e];
                        if p.iter().collect::<BTreeSet<_>>().len() == 5 {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn criterion_1(rng: &mut StdRng) -> Outcome {
    let perms = all_permutations();
    ensure(perms.len() == 120, "permutation oracle is not S_5")?;
    let tuples: Vec<[i64; 5]> = (0..1000)
        .map(|_| std::array::from_fn(|_| rng.random_range(-15..=15)))
        .collect();
    let start = Instant::now();
    let fast: Vec<bool> = tuples
        .iter()
        .map(|q| check_free(&QTuple::new(*q)).verdict)
        .collect();
    let elapsed = start.elapsed();
    let mut free = 0;
    for (q, &got) in tuples.iter().zip(&fast) {
        let oracle = q.iter().all(|x| x % 2 != 0)
            && perms
                .iter()
                .all(|s| gcd(q[s[0]] + q[s[1]], q[s[2]] + q[s[3]]) == 2);
        ensure(
            got == oracle,
            format!("{q:?}: 15-combination check {got}, oracle {oracle}"),
        )?;
        free += usize::from(got);
    }
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("1000 tuples agree ({free} free), {elapsed:?}"))
}

fn criterion_2(rng: &mut StdRng) -> Outcome {
    for _ in 0..10_000 {
        let q: [i64; 5] = std::array::from_fn(|_| rng.random_range(-1000..=1000));
        // coefficient of x^2 in prod (x + q_i)
        let mut poly = vec![1i64];
        for qi in q {
            let mut next = vec![0i64; poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] += c * qi;
                next[k + 1] += c;
            }
            poly = next;
        }
        ensure(
            e3(&QTuple::new(q)) == poly[2],
            format!("e3 mismatch at {q:?}"),
        )?;
    }
    let support = |b: &BettiVector| -> Vec<usize> { (0..=13).filter(|&k| b.get(k) > 0).collect() };
    for (m, total, supp) in [
        (3u64, 10u64, vec![0, 2, 4, 5, 6, 7, 8, 9, 11, 13]),
        (9, 10, vec![0, 2, 4, 5, 6, 7, 8, 9, 11, 13]),
        (1, 6, vec![0, 2, 4, 9, 11, 13]),
        (5, 6, vec![0, 2, 4, 9, 11, 13]),
    ] {
        let b = mod_p_betti(&CohomologyProfile::from_torsion_order(m)?, 3)?;
        ensure(
            b.total() == total && support(&b) == supp,
            format!("m = {m}: {:?}", b.dims()),
        )?;
        ensure(
            b.dims().iter().all(|&d| d <= 1),
            format!("m = {m}: dims above 1"),
        )?;
    }
    Ok("e3 agrees on 10000 tuples; mod-3 profiles total 10 / 6 with the expected support".into())
}

fn burnside_catalog() -> Result<Vec<(BurnsideParams, GroupTable)>, Failure> {
    let mut out = Vec::new();
    for p in BurnsideParams::all_up_to(200) {
        out.push((p, build_burnside(p)?.table));
    }
    Ok(out)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let all = BurnsideParams::all_up_to(200);
    for &p in &all {
        let b = build_burnside(p)?;
        let g = &b.table;
        ensure(
            g.order() as u64 == p.m * p.n,
            format!("{p}: order {}", g.order()),
        )?;
        ensure(
            all_sylow_cyclic(g),
            format!("{p}: a Sylow subgroup is not cyclic"),
        )?;
        let core = b.normal_cyclic_core();
        let d = b.class_d();
        ensure(
            core.index() as u64 == d,
            format!("{p}: core index {} != {d}", core.index()),
        )?;
        ensure(
            core.is_normal() && core.is_cyclic(),
            format!("{p}: core not normal cyclic"),
        )?;
        ensure(
            core.is_maximal_cyclic(),
            format!("{p}: core not maximal cyclic"),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{} parameter triples, {elapsed:?}", all.len()))
}

fn criterion_4() -> Outcome {
    let mut groups: Vec<(String, GroupTable)> = burnside_catalog()?
        .into_iter()
        .filter(|(p, _)| p.order() % 2 == 1)
        .map(|(p, g)| (p.to_string(), g))
        .collect();
    for n in (1..=243u64).step_by(2) {
        for f in abelian_groups_of_order(n) {
            let f: Vec<usize> = f.iter().map(|&x| x as usize).collect();
            groups.push((format!("abelian{f:?}"), abelian(&f)?));
        }
    }
    for (name, g) in &groups {
        let mut no_pairs = true;
        for p in prime_divisors(g.order() as u64) {
            no_pairs &= p2_condition(g, p)?;
        }
        ensure(
            all_sylow_cyclic(g) == no_pairs,
            format!("exception: {name}"),
        )?;
    }
    Ok(format!(
        "{} odd-order groups, zero exceptions",
        groups.len()
    ))
}

fn criterion_5() -> Outcome {
    let groups = [
        build_standard("Z27")?,
        build_standard("Z9xZ3")?,
        build_standard("Z3xZ3xZ3")?,
        z9_semi_z3(),
        u33(),
    ];
    let mut labels = BTreeSet::new();
    for g in &groups {
        labels.insert(classify_order_27(g)?);
    }
    ensure(labels.len() == 5, format!("labels {labels:?}"))?;
    let u = u33();
    let nr = normal_rank(&u, 3)?;
    ensure(nr == 2, format!("normal rank of U(3,3) is {nr}"))?;
    ensure(
        u.elements().skip(1).all(|x| u.element_order(x) == 3),
        "U(3,3) has an element of order 9",
    )?;
    Ok(format!(
        "labels {labels:?}; U(3,3) normal rank 2, exponent 3"
    ))
}

fn criterion_6() -> Outcome {
    let none = BettiVector::empty();
    let s5 = smith_gysin_solve(&BettiVector::sphere(5), &none, 5);
    ensure(
        s5.len() == 1 && s5[0].r == [1, 0, 1, 0, 1] && s5[0].chi_bar == 3,
        format!("S5: {s5:?}"),
    )?;
    let cs = smith_gysin_solve(&ComponentType::CP1xS3.betti(), &none, 5);
    ensure(
        cs.len() == 1 && cs[0].r == [1, 0, 2, 0, 1],
        format!("CP1xS3: {cs:?}"),
    )?;
    let mut checked = 0;
    for c in ComponentType::ALL {
        let b = c.betti();
        if b.euler_char() != 0 {
            ensure(
                smith_gysin_solve(&b, &none, c.dim()).is_empty(),
                format!("{c} has a solution"),
            )?;
            checked += 1;
        }
    }
    for n in (2..=8).step_by(2) {
        ensure(
            smith_gysin_solve(&BettiVector::sphere(n), &none, n).is_empty(),
            format!("S{n} has a solution"),
        )?;
        checked += 1;
    }
    Ok(format!("unique solutions for S5 and CP1xS3; {checked} inputs with nonzero Euler characteristic rejected"))
}

fn criterion_7() -> Outcome {
    let got = integer_trace_set(2, true)?;
    ensure(got == BTreeSet::from([-1, 2]), format!("trace set {got:?}"))?;
    let mut sweep = BTreeSet::from([2i64]);
    for n in (1..=99u64).step_by(2) {
        for a in 0..n {
            let v = 2.0 * (2.0 * PI * a as f64 / n as f64).cos();
            if (v - v.round()).abs() < 1e-9 {
                sweep.insert(v.round() as i64);
            }
        }
    }
    ensure(sweep == got, format!("sweep {sweep:?}"))?;
    let lef = lefschetz_value_set(&LefschetzSpec {
        dims: vec![1, 0, 2, 0, 1],
        odd_order: true,
    })?;
    ensure(
        lef == BTreeSet::from([1, 4]),
        format!("Lefschetz values {lef:?}"),
    )?;
    Ok("trace set {-1, 2} matches the odd n <= 99 sweep; Lefschetz values {1, 4}".into())
}

fn criterion_8() -> Outcome {
    let d = bg_dims(3, 6)?;
    ensure(
        (d[6], d[3], d[2], d[0]) == (7, 4, 3, 1),
        format!("bg dims {d:?}"),
    )?;
    let start = Instant::now();
    let v3 = exhaustive_verdict(3)?;
    let t3 = start.elapsed();
    ensure(v3.verdict, format!("p = 3: {v3:?}"))?;
    ensure(t3 < Duration::from_secs(60), format!("p = 3 took {t3:?}"))?;
    let start = Instant::now();
    let v5 = exhaustive_verdict(5)?;
    let t5 = start.elapsed();
    ensure(v5.verdict, format!("p = 5: {v5:?}"))?;
    Ok(format!(
        "p = 3: {} choices, min survivors {}, {t3:?}; p = 5: {} choices, min survivors {}, {t5:?}",
        v3.choices_examined, v3.min_deg6_survivors, v5.choices_examined, v5.min_deg6_survivors
    ))
}

fn criterion_9() -> Outcome {
    let expected = vec![
        vec!["S5"],
        vec!["S5", "S5"],
        vec!["S5", "S5", "S5"],
        vec!["CP1xS3"],
        vec!["S5", "CP1xS3"],
    ];
    for _ in 0..3 {
        let got: Vec<Vec<&str>> = enumerate_profiles(6, 5)?
            .iter()
            .map(|p| p.labels())
            .collect();
        ensure(got == expected, format!("profiles {got:?}"))?;
    }
    Ok("five profiles in a stable order".into())
}

fn criterion_10() -> Outcome {
    let rational: BTreeSet<u64> = (1..=27).filter(|d| 18 % d == 0 || *d == 27).collect();
    let cases = [
        (2, CohomologyType::RationalBazaikin, rational),
        (
            2,
            CohomologyType::Mod3Bazaikin,
            BTreeSet::from([1, 2, 3, 6, 9]),
        ),
        (
            3,
            CohomologyType::RationalBazaikin,
            BTreeSet::from([1, 2, 3]),
        ),
        (3, CohomologyType::Mod3Bazaikin, BTreeSet::from([1, 2, 3])),
    ];
    let mut steps = 0;
    for (rank, ty, expected) in cases {
        let r = index_bound_report(&ScenarioInput::new(rank, ty))?;
        ensure(
            r.index_bound_set == expected,
            format!("rank {rank} {ty:?}: {:?}", r.index_bound_set),
        )?;
        let bad = r.replay()?;
        ensure(
            bad.is_empty(),
            format!("rank {rank} {ty:?}: steps {bad:?} do not replay"),
        )?;
        steps += r.case_trace.0.len();
    }
    let indices_step = |components: Vec<ComponentType>| -> Result<serde_json::Value, Failure> {
        let b = five_dim_branch(&pcurv13::cohomology::FixedPointProfile::new(components))?;
        let step = b
            .trace
            .0
            .iter()
            .find(|s| matches!(s.check, Check::CyclicIndices { .. }))
            .ok_or("no divisibility step")?;
        Ok(step.check.evaluate()?)
    };
    let cs = indices_step(vec![ComponentType::CP1xS3])?;
    ensure(cs == json!([1]), format!("CP1xS3 branch allows d in {cs}"))?;
    let s5 = indices_step(vec![ComponentType::S5])?;
    ensure(s5 == json!([1, 3]), format!("S5 branch allows d in {s5}"))?;
    Ok(format!(
        "bound sets match; {steps} steps replayed; live d = 1 for CP1xS3, d | 3 for S5"
    ))
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(0x5eed13);
    let criteria: Vec<(&str, Box<dyn FnOnce(&mut StdRng) -> Outcome>)> = vec![
        ("freeness reduction", Box::new(criterion_1)),
        ("bazaikin constants", Box::new(criterion_2)),
        ("burnside suite", Box::new(|_| criterion_3())),
        ("wolf equivalence", Box::new(|_| criterion_4())),
        ("order-27 facts", Box::new(|_| criterion_5())),
        ("smith-gysin", Box::new(|_| criterion_6())),
        ("trace sets", Box::new(|_| criterion_7())),
        ("spectral engine", Box::new(|_| criterion_8())),
        ("profile census", Box::new(|_| criterion_9())),
        ("pipeline", Box::new(|_| criterion_10())),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        match run(&mut rng) {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
