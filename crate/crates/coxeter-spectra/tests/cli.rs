//! End-to-end checks of the `coxspec` binary: flag handling, JSON output
//! shapes, exit-code semantics, and output determinism.

use std::process::{Command, Output};

fn coxspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn normalize_b2_spec_word() {
    let out = coxspec(&["normalize", "--system", "B2", "--word", "2,1,2,1", "--trace"]);
    let json = stdout_json(&out);
    assert_eq!(json["echelon"], serde_json::json!([1, 2, 1, 2]));
    assert_eq!(json["deltas"], serde_json::json!(["t1", "g2", "1"]));
    assert_eq!(json["steps"].as_array().unwrap().len(), 1);
    assert_eq!(json["steps"][0]["kind"], "circular");
}

#[test]
fn normalize_a2_word_reduces_to_a_letter() {
    let out = coxspec(&["normalize", "--system", "A2", "--word", "1,2,1"]);
    let json = stdout_json(&out);
    assert_eq!(json["echelon"], serde_json::json!([1]));
    assert!(json.get("steps").is_none());
}

#[test]
fn group_classes_of_d4() {
    let out = coxspec(&["group", "--system", "D4", "--classes"]);
    let json = stdout_json(&out);
    assert_eq!(json["order"], 192);
    let classes = json["classes"].as_array().unwrap();
    let total: u64 = classes.iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 192);
    assert_eq!(classes[0]["size"], 1);
    assert_eq!(classes[0]["representative_word"], serde_json::json!([]));
}

#[test]
fn spectrum_of_a2_regular_is_deterministic() {
    let first = coxspec(&["spectrum", "--system", "A2", "--rep", "regular"]);
    let second = coxspec(&["spectrum", "--system", "A2", "--rep", "regular"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "output must be bit-identical across runs");
    let json = stdout_json(&first);
    assert_eq!(json["nvars"], 3);
    // Leading term x0^6 with coefficient 1.
    assert_eq!(json["terms"][0]["exp"], serde_json::json!([6, 0, 0]));
    assert_eq!(json["terms"][0]["coef"], "1");
}

#[test]
fn spectrum_slice_json_and_point_cloud() {
    let out = coxspec(&["spectrum", "--system", "B2", "--rep", "regular", "--slice", "1,2"]);
    let json = stdout_json(&out);
    assert_eq!(json["nvars"], 2);
    // Leading term x^8 of the degree-8 slice.
    assert_eq!(json["terms"][0]["exp"], serde_json::json!([8, 0]));

    let csv = coxspec(&[
        "spectrum", "--system", "B2", "--rep", "regular", "--slice", "1,2", "--out", "csv",
    ]);
    assert!(csv.status.success());
    let text = String::from_utf8_lossy(&csv.stdout);
    assert!(text.starts_with("component,t,x,y"));
    // All four lines and the circle appear as sampled components.
    for label in ["x+y=1", "x+y=-1", "x-y=1", "x-y=-1", "ellipse"] {
        assert!(text.contains(label), "missing {label}");
    }
}

#[test]
fn compare_exit_codes() {
    let dir = std::env::temp_dir().join("coxspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let trivial = r#"{"system":{"family":"A","n":2},"dim":1,"exact":true,"matrices":[[["1"]],[["1"]]]}"#;
    let sign = r#"{"system":{"family":"A","n":2},"dim":1,"exact":true,"matrices":[[["-1"]],[["-1"]]]}"#;
    let p1 = dir.join("trivial.json");
    let p2 = dir.join("trivial2.json");
    let p3 = dir.join("sign.json");
    std::fs::write(&p1, trivial).unwrap();
    std::fs::write(&p2, trivial).unwrap();
    std::fs::write(&p3, sign).unwrap();

    let same = coxspec(&["compare", "--rep1", p1.to_str().unwrap(), "--rep2", p2.to_str().unwrap()]);
    assert_eq!(same.status.code(), Some(0));
    let diff = coxspec(&["compare", "--rep1", p1.to_str().unwrap(), "--rep2", p3.to_str().unwrap()]);
    assert_eq!(diff.status.code(), Some(1));
}

#[test]
fn dihedral_report_from_file() {
    let dir = std::env::temp_dir().join("coxspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let pair = r#"{"a1":[["1","0"],["0","-1"]],"a2":[["0","1"],["1","0"]]}"#;
    let path = dir.join("pair.json");
    std::fs::write(&path, pair).unwrap();
    let out = coxspec(&["dihedral-report", "--matrices", path.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["lines"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(json["ellipses"][0][1], 1);
    assert_eq!(json["residual"], false);

    let csv = coxspec(&["dihedral-report", "--matrices", path.to_str().unwrap(), "--out", "csv"]);
    let text = String::from_utf8_lossy(&csv.stdout);
    assert!(text.starts_with("component,t,x,y"));
    assert!(text.lines().count() > 10);
}

#[test]
fn ctilde2_labels() {
    let out = coxspec(&["ctilde2", "--word", "b2,r1,r1,b3", "--label"]);
    let json = stdout_json(&out);
    assert_eq!(json["coset"], "b2b3");
    let j = json["class"]["j"].as_u64().unwrap();
    assert_eq!(j, 3);

    // The identity word labels as w0(0,0).
    let out = coxspec(&["ctilde2", "--word", "", "--label"]);
    let json = stdout_json(&out);
    assert_eq!(json["class"], serde_json::json!({"j": 0, "m1": 0, "m2": 0}));
}

#[test]
fn spectrum_from_representation_file() {
    let dir = std::env::temp_dir().join("coxspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let sign = r#"{"system":{"family":"A","n":2},"dim":1,"exact":true,"matrices":[[["-1"]],[["-1"]]]}"#;
    let path = dir.join("sign-rep.json");
    std::fs::write(&path, sign).unwrap();
    let arg = format!("@{}", path.to_str().unwrap());
    let out = coxspec(&["spectrum", "--system", "A2", "--rep", &arg]);
    let json = stdout_json(&out);
    // x0 − x1 − x2.
    assert_eq!(json["terms"].as_array().unwrap().len(), 3);
    assert_eq!(json["terms"][0]["coef"], "1");
    assert_eq!(json["terms"][1]["coef"], "-1");
}

#[test]
fn usage_errors_exit_2() {
    let out = coxspec(&["normalize", "--system", "A2"]); // missing --word
    assert_eq!(out.status.code(), Some(2));
    let out = coxspec(&["normalize", "--system", "A2", "--word", "1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = coxspec(&["normalize", "--system", "Q9", "--word", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_single_criterion() {
    let out = coxspec(&["selftest", "--only", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("criterion 05"));
    assert!(text.contains("PASS"));
}
