use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use weakhopf::exactlin::Field;
use weakhopf::groupoid::{groupoid_dual_direct, FiniteGroupoid};
use weakhopf_cli::doc::{canonical, weak_hopf_document};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn weakhopf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_weakhopf")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).expect("report is JSON")
}

fn failed_names(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn check_reports_hopf_classification() {
    let pair = weakhopf(&["check", path(&data("pair2.json"))]);
    assert_eq!(pair.code, 0, "{}", pair.stderr);
    let r = json(&pair);
    assert_eq!(r["flags"]["ordinary_hopf"], false);
    assert_eq!(r["flags"]["weak"], true);
    assert_eq!(r["dimensions"]["H_t"], 2);
    assert_eq!(r["verdict"], "pass");

    let c2 = weakhopf(&["--format", "text", "check", path(&data("c2.json"))]);
    assert_eq!(c2.code, 0);
    assert!(c2.stdout.contains("ordinary_hopf: true"));
}

#[test]
fn malformed_json_reports_position() {
    let run = weakhopf(&["check", path(&data("malformed.json"))]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("malformed.json:4:0"), "{}", run.stderr);
}

#[test]
fn schema_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("kind.json", r#"{"kind": "vector_space", "payload": {}}"#, "unknown kind"),
        (
            "range.json",
            r#"{"kind": "algebra", "payload": {"dim": 1, "mult": [[0, 0, 1, "1"]], "unit": ["1"]}}"#,
            "out of range",
        ),
        (
            "float.json",
            r#"{"kind": "algebra", "payload": {"dim": 1, "mult": [[0, 0, 0, 1.5]], "unit": ["1"]}}"#,
            "payload",
        ),
        ("field.json", r#"{"kind": "algebra", "field": "Fp:8", "payload": {"dim": 0, "mult": [], "unit": []}}"#, "field"),
    ];
    for (name, body, needle) in cases {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        let run = weakhopf(&["radical", path(&p)]);
        assert_eq!(run.code, 2, "{name}: {}", run.stdout);
        assert!(run.stderr.contains(needle), "{name}: {}", run.stderr);
    }
}

#[test]
fn dual_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (once, twice) = (dir.path().join("once.json"), dir.path().join("twice.json"));
    for name in ["c2_algebra.json", "pair2_algebra.json", "c2_point_algebra.json"] {
        assert_eq!(weakhopf(&["dual", path(&data(name)), "--out", path(&once)]).code, 0);
        assert_eq!(weakhopf(&["dual", path(&once), "--out", path(&twice)]).code, 0);
        assert_eq!(fs::read(data(name)).unwrap(), fs::read(&twice).unwrap(), "{name}");
    }
}

#[test]
fn dual_of_groupoid_matches_direct_construction() {
    let run = weakhopf(&["dual", path(&data("pair2.json"))]);
    assert_eq!(run.code, 0);
    let direct = groupoid_dual_direct(&FiniteGroupoid::pair(2), Field::Rationals).unwrap();
    // Both groupoids sort their morphisms by (source, target), so the bases
    // line up and the documents agree byte for byte.
    assert_eq!(run.stdout, canonical(&weak_hopf_document(&direct)));
}

#[test]
fn dual_of_c2_has_orthogonal_idempotent_basis() {
    let run = weakhopf(&["dual", path(&data("c2.json"))]);
    let doc: Value = serde_json::from_str(&run.stdout).unwrap();
    let mult = doc["payload"]["mult"].as_array().unwrap();
    let expect: Vec<Value> = serde_json::from_str(r#"[[0, 0, 0, "1"], [1, 1, 1, "1"]]"#).unwrap();
    assert_eq!(mult, &expect);
}

#[test]
fn field_flag_overrides_document() {
    let run = weakhopf(&["--field", "Fp:3", "check", path(&data("pair2.json"))]);
    assert_eq!(run.code, 0);
    assert_eq!(json(&run)["field"], "Fp:3");
    let bad = weakhopf(&["--field", "Fp:9", "check", path(&data("pair2.json"))]);
    assert_eq!(bad.code, 2);
}

#[test]
fn timing_only_on_request() {
    let plain = json(&weakhopf(&["check", path(&data("c2.json"))]));
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&weakhopf(&["--timing", "check", path(&data("c2.json"))]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn certify_writes_certificate_file() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let run = weakhopf(&["certify", path(&data("pair2.json")), "trivial", "--out", path(&cert)]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let report = json(&run);
    assert!(report.get("certificate").is_none());
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"iterated_semisimple"));
    assert!(names.contains(&"target_smash_map_bijective"));
    let c: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["valid"], true);
    assert_eq!(c["dimensions"]["commutant"], 8);
    assert_eq!(c["alpha"].as_array().unwrap().len(), 8);
}

#[test]
fn certify_rejects_mismatched_action_hopf() {
    let run = weakhopf(&[
        "certify",
        path(&data("pair2_algebra.json")),
        "file",
        "--action",
        path(&data("zero_action.json")),
    ]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("differs"), "{}", run.stderr);
    let usage = weakhopf(&["certify", path(&data("pair2.json")), "file"]);
    assert_eq!(usage.code, 2);
}

#[test]
fn certify_reports_upstream_failure() {
    let run = weakhopf(&["certify", path(&data("corrupted_antipode.json")), "trivial"]);
    assert_eq!(run.code, 1);
    let report = json(&run);
    assert!(failed_names(&report).contains(&"antipode_convolution".to_string()));
    assert_eq!(report["certificate"]["valid"], false);
}

#[test]
fn smash_output_feeds_radical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("smash.json");
    let run = weakhopf(&["smash", path(&data("pair2.json")), "--action", "dual", "--out", path(&out)]);
    assert_eq!(run.code, 0);
    assert_eq!(json(&run)["dimensions"]["A#H"], 8);
    let radical = weakhopf(&["radical", path(&out)]);
    assert_eq!(radical.code, 0, "{}", radical.stdout);
    assert_eq!(json(&radical)["radical"]["dim"], 0);
}

#[test]
fn radical_over_prime_field_is_unsupported() {
    let run = weakhopf(&["--field", "Fp:5", "radical", path(&data("dual_numbers.json"))]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("unsupported"));
}

#[test]
fn action_with_inline_hopf() {
    let dir = tempfile::tempdir().unwrap();
    let hopf: Value = serde_json::from_str(&fs::read_to_string(data("c2_algebra.json")).unwrap()).unwrap();
    let mut action: Value = serde_json::from_str(&fs::read_to_string(data("zero_action.json")).unwrap()).unwrap();
    // A = k with the counit action e_i · 1 = 1.
    action["payload"]["action"] = serde_json::from_str(r#"[[0, 0, 0, "1"], [1, 0, 0, "1"]]"#).unwrap();
    for inline in [hopf.clone(), hopf["payload"].clone()] {
        action["payload"]["hopf"] = inline;
        let p = dir.path().join("action.json");
        fs::write(&p, canonical(&action)).unwrap();
        let run = weakhopf(&["smash", path(&p)]);
        assert_eq!(run.code, 0, "{}", run.stdout);
        assert_eq!(json(&run)["dimensions"]["A#H"], 2);
    }
}
