use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcurv13"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bazaikin_check_json() {
    let v = run_json(&["bazaikin", "check", "1", "1", "1", "1", "1", "--json"]);
    assert_eq!(v["q"], json!([1, 1, 1, 1, 1]));
    assert_eq!(v["free"], json!(true));
    assert_eq!(v["failing_pairs"], json!([]));
    assert_eq!(v["curvature"], json!("positive"));
    assert_eq!(v["e3"], json!(10));
    assert_eq!(v["m"], json!("10/8"));
    assert_eq!(v["m_integral"], json!(false));
    assert!(v["mod3_type"] == "CP2xS9" || v["mod3_type"] == "CP4xS5");

    let v = run_json(&["bazaikin", "check", "5", "3", "3", "1", "1", "--json"]);
    assert_eq!(v["free"], json!(false));
    assert!(!v["failing_pairs"].as_array().unwrap().is_empty());

    let v = run_json(&["bazaikin", "check", "3", "1", "1", "1", "-3", "--json"]);
    assert_eq!(v["curvature"], json!("mixed"));
}

#[test]
fn bazaikin_enumerate() {
    let v = run_json(&["bazaikin", "enumerate", "--bound", "2"]);
    assert_eq!(v["spaces"], json!([[1, 1, 1, 1, 1]]));
    let out = run(&["bazaikin", "enumerate", "--bound", "5", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q1\tq2\tq3\tq4\tq5"));
    assert!(lines.all(|l| l.split('\t').count() == 5));
}

#[test]
fn group_round_trip_through_file() {
    let dir = std::env::temp_dir().join(format!("pcurv13-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u33.grp");
    let p = path.to_str().unwrap();
    assert!(run(&["group", "build", "--name", "U33", "--out", p])
        .status
        .success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("order 27\n"));
    let v = run_json(&["group", "analyze", "--in", p, "--json"]);
    assert_eq!(v["order"], json!(27));
    assert_eq!(v["sylow"]["3"], json!(false));
    assert_eq!(v["p2"]["3"], json!(false));
    assert_eq!(v["normal_rank"]["3"], json!(2));
    assert_eq!(v["min_cyclic_index"], json!(9));
    assert_eq!(v["davis"], json!({ "a": 0, "odd_order": 27 }));

    let out = run(&["group", "build", "--burnside", "7", "3", "2"]);
    assert!(out.status.success());
    std::fs::write(&path, &out.stdout).unwrap();
    let v = run_json(&["group", "analyze", "--in", p, "--json"]);
    assert_eq!(v["order"], json!(21));
    assert_eq!(v["min_cyclic_index"], json!(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixedpoint_commands() {
    let v = run_json(&[
        "fixedpoint",
        "profiles",
        "--budget",
        "6",
        "--dim",
        "5",
        "--json",
    ]);
    assert_eq!(
        v["profiles"],
        json!([
            ["S5"],
            ["S5", "S5"],
            ["S5", "S5", "S5"],
            ["CP1xS3"],
            ["S5", "CP1xS3"]
        ])
    );
    let v = run_json(&["fixedpoint", "gysin", "--space", "S5", "--fixed", "empty"]);
    assert_eq!(v["R"], json!([1, 0, 1, 0, 1]));
    assert_eq!(v["chi_bar"], json!(3));
    let v = run_json(&["fixedpoint", "obstruct", "--group", "cd:3", "--lef", "1,4"]);
    assert_eq!(v["verdict"], json!("excluded"));
    let v = run_json(&["fixedpoint", "obstruct", "--group", "cd:3", "--lef", "3"]);
    assert_eq!(v["verdict"], json!("allowed"));
}

#[test]
fn ss_verify() {
    let v = run_json(&["ss", "verify", "--p", "3"]);
    assert_eq!(v["p"], json!(3));
    assert_eq!(v["free_action_possible"], json!(false));
    assert!(v["min_deg6_survivors"].as_u64().unwrap() >= 1);
    assert!(v["choices"].as_u64().unwrap() > 0);
    let t = run_json(&["ss", "verify", "--p", "3", "--trace"]);
    assert_eq!(t["choices"], v["choices"]);
    assert!(t["e2"]["entries"].is_array());
}

#[test]
fn index_bound_outputs() {
    let v = run_json(&[
        "theorem-a",
        "--rank",
        "2",
        "--cohomology",
        "rational",
        "--json",
    ]);
    assert_eq!(v["index_bound_set"], json!([1, 2, 3, 6, 9, 18, 27]));
    assert!(v["axioms_used"].as_array().unwrap().len() >= 6);
    let v = run_json(&["index-bound", "--rank", "2", "--cohomology", "mod3"]);
    assert_eq!(v["index_bound_set"], json!([1, 2, 3, 6, 9]));
    let v = run_json(&["index-bound", "--rank", "3", "--cohomology", "rational"]);
    assert_eq!(v["index_bound_set"], json!([1, 2, 3]));

    let out = run(&[
        "theorem-a",
        "--rank",
        "2",
        "--cohomology",
        "rational",
        "--explain",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with('[')));
    assert!(text.contains("[conclusion]"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["theorem-a", "--rank", "2", "--cohomology", "mod3", "--json"][..],
        &["bazaikin", "enumerate", "--bound", "7"][..],
    ] {
        let a = run(args);
        let b = Command::new(env!("CARGO_BIN_EXE_pcurv13"))
            .args(args)
            .env("PCURV13_THREADS", "1")
            .output()
            .unwrap();
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn invalid_input_exits_with_2() {
    let cases: [&[&str]; 7] = [
        &["theorem-a", "--rank", "5", "--cohomology", "rational"],
        &["theorem-a", "--rank", "2", "--cohomology", "integral"],
        &["ss", "verify", "--p", "2"],
        &["ss", "verify", "--p", "9"],
        &["fixedpoint", "gysin", "--space", "S4"],
        &["group", "build", "--burnside", "4", "2", "3"],
        &["bazaikin", "check", "1", "1"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
