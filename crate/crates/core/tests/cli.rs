use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ivind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ivind")).args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn cousin_report_shape() {
    let out = ivind(&["cousin", "--gauge", "3/10", "--interval", "0", "1"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["instance"], "cousin");
    assert_eq!(r["outcome"]["status"], "certified");
    assert_eq!(r["outcome"]["certificate"]["cuts"][0], "0");
}

#[test]
fn sign_refutation_exits_one_with_leaf() {
    let out = ivind(&["sign", "--fn", "x - 1/2", "--interval", "0", "1", "--max-depth", "20"]);
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert_eq!(r["outcome"]["reason"], "depth-limit");
    assert!(r["outcome"]["location"].to_string().contains("1/2"));
}

#[test]
fn step_limit_exits_two() {
    let out = ivind(&["cousin", "--gauge", "1/1000", "--interval", "0", "1", "--max-steps", "5"]);
    assert_eq!(code(&out), 2);
    assert_eq!(report(&out)["outcome"]["reason"], "step-limit");
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(code(&ivind(&["bound", "--fn", "1 +* x", "--interval", "0", "1"])), 3);
    assert_eq!(code(&ivind(&["bound", "--fn", "x", "--interval", "1", "0"])), 3);
    assert_eq!(code(&ivind(&["heine", "--fn", "x", "--set", "0,1", "--eps", "0"])), 3);
    assert_eq!(code(&ivind(&["verify", "--report", "/nonexistent/report.json"])), 3);
    assert_eq!(code(&ivind(&["frobnicate"])), 3);
    assert_eq!(code(&ivind(&["--help"])), 0);
}

fn round_trip(dir: &Path, name: &str, args: &[&str]) {
    let path = dir.join(format!("{name}.json"));
    let mut full = vec!["--json", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let out = ivind(&full);
    assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stderr));
    let verified = ivind(&["verify", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&verified), 0, "{name}: {}", String::from_utf8_lossy(&verified.stdout));
}

#[test]
fn certificates_verify_after_saving() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    round_trip(d, "cousin", &["cousin", "--gauge", "pw(x<1, (1-x)/2, 1/4)", "--interval", "0", "1"]);
    round_trip(d, "cousin-bisect", &["cousin", "--gauge", "1/8", "--interval", "-1", "1", "--strategy", "bisect"]);
    round_trip(d, "heine", &["heine", "--fn", "x*x", "--set", "0,1", "--eps", "1/10"]);
    round_trip(d, "bound", &["bound", "--fn", "1/(x*x + 1/100)", "--interval", "-1", "1"]);
    round_trip(d, "sign", &["sign", "--fn", "x*x + 1", "--interval", "-1", "1"]);
    round_trip(d, "monotone", &["monotone", "--fn", "x*x*x", "--interval", "-1", "1"]);
    round_trip(d, "tilt", &["monotone", "--fn", "x*x", "--interval", "0", "1", "--tilt", "1/100"]);
    round_trip(d, "max", &["max", "--fn", "-abs(x - 1/3)", "--set", "0,1"]);
    round_trip(d, "dini", &["dini", "--seq", "x/n", "--set", "0,1", "--eps", "1/10"]);
    round_trip(d, "bw", &["bw", "--points", "0,1/3,1/2,2", "--interval", "0", "1"]);

    let cover = d.join("cover-input.json");
    fs::write(&cover, r#"{"members":[{"lo":"-1/10","hi":"6/10"},{"lo":"1/2","hi":"11/10"}]}"#).unwrap();
    round_trip(d, "cover", &["cover", "--set", "0,1", "--cover", cover.to_str().unwrap()]);

    let family = d.join("family-input.json");
    fs::write(
        &family,
        r#"{"interval":{"lo":"0","hi":"1"},"components":[{"lo":"0","hi":"1 - n/5"}],"max_index":20}"#,
    )
    .unwrap();
    round_trip(d, "cantor", &["cantor", "--family", family.to_str().unwrap()]);
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bound.json");
    let out = ivind(&["--json", path.to_str().unwrap(), "bound", "--fn", "x", "--interval", "0", "1"]);
    assert_eq!(code(&out), 0);
    let mut r: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    r["outcome"]["certificate"]["M"] = Value::String("1/2".into());
    fs::write(&path, r.to_string()).unwrap();
    assert_eq!(code(&ivind(&["verify", "--report", path.to_str().unwrap()])), 1);
}

#[test]
fn trace_file_is_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.jsonl");
    let out = ivind(&["--trace", trace.to_str().unwrap(), "bound", "--fn", "x", "--interval", "0", "1"]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&trace).unwrap();
    assert!(text.lines().count() > 0);
    for line in text.lines() {
        let event: Value = serde_json::from_str(line).unwrap();
        assert!(event["event"].is_string());
    }
}
