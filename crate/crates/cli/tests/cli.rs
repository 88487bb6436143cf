use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use trace_toolkit_cli::rerender;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trace-toolkit"))
        .args(args)
        .env_remove("TRACE_TOOLKIT_MAX_FROBENIUS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, String) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap(), text)
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(xs) => xs.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

fn all_hard_pass(v: &Value) -> bool {
    v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["status"] != "fail")
}

#[test]
fn semigroup_five_six_seven() {
    let (v, text) = json(&["semigroup", "5,6,7", "--matrix"]);
    assert_eq!(v["schema"], "trace-toolkit/1");
    assert_eq!(v["results"]["trace"]["residue"], 1);
    assert_eq!(v["results"]["trace"]["nearly_gorenstein"], true);
    assert_eq!(v["results"]["matrix"]["a"], serde_json::json!([1, 1, 2]));
    assert_eq!(v["results"]["matrix"]["b"], serde_json::json!([3, 1, 1]));
    assert!(all_hard_pass(&v));
    assert!(no_floats(&v));
    assert_eq!(rerender(&text).unwrap(), text);
}

#[test]
fn generators_comma_or_space_separated() {
    let (a, _) = json(&["semigroup", "5,6,7"]);
    let (b, _) = json(&["semigroup", "5 6 7"]);
    let (c, _) = json(&["semigroup", "5", "6", "7"]);
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["results"], c["results"]);
}

#[test]
fn semigroup_three_seven_eight() {
    let (v, _) = json(&["semigroup", "3,7,8"]);
    assert_eq!(v["results"]["trace"]["residue"], 2);
    assert_eq!(v["results"]["trace"]["trace_is_conductor"], true);
    let text = String::from_utf8(run(&["semigroup", "3,7,8"]).stdout).unwrap();
    assert!(text.contains("trace.trace_is_conductor: true"));
    assert!(text.contains("summary:"));
}

#[test]
fn errors_exit_with_two() {
    let out = run(&["semigroup", "2,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NonCoprime"));

    let out = run(&["semigroup", "5,x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["scan", "enumerate", "--frobenius-max", "70"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BoundOutOfRange"));

    let out = run(&["scan", "shift", "--a", "3", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("InvalidParams"));

    let out = run(&["scan", "minmult", "--frobenius-max", "10", "--threads", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["algebra", "sqvero", "3", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn frobenius_bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_trace-toolkit"))
        .args(["semigroup", "5,6,7"])
        .env("TRACE_TOOLKIT_MAX_FROBENIUS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FrobeniusTooLarge"));

    let out = Command::new(env!("CARGO_BIN_EXE_trace-toolkit"))
        .args(["semigroup", "5,6,7"])
        .env("TRACE_TOOLKIT_MAX_FROBENIUS", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scans_pass() {
    let (v, text) = json(&["scan", "shift", "--a", "1", "--b", "2", "--periods", "5"]);
    assert!(all_hard_pass(&v));
    assert_eq!(v["results"]["records"].as_array().unwrap().len(), 10);
    assert_eq!(rerender(&text).unwrap(), text);

    let (v, _) = json(&["scan", "arithmetic", "--a-max", "20"]);
    let n = v["results"]["instances"].as_u64().unwrap();
    let ng = v["results"]["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["nearly_gorenstein"] == true)
        .count() as u64;
    assert_eq!(ng, n);

    let (v, _) = json(&["scan", "minmult", "--frobenius-max", "40"]);
    assert_eq!(v["results"]["equivalence_pass"], v["results"]["instances"]);
}

#[test]
fn scan_output_does_not_depend_on_threads() {
    for kind in ["minmult", "enumerate"] {
        let (_, one) = json(&["scan", kind, "--frobenius-max", "26", "--threads", "1"]);
        let (_, four) = json(&["scan", kind, "--frobenius-max", "26", "--threads", "4"]);
        assert_eq!(one, four, "{kind}");
    }
}

#[test]
fn enumerate_reports_question_without_failing() {
    let (v, _) = json(&["scan", "enumerate", "--frobenius-max", "25"]);
    let q = v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|a| a["name"] == "question_residue_at_most_g_minus_n")
        .unwrap();
    assert_eq!(q["status"], "report-only");
    // the first violation has Fr = 25
    assert_eq!(v["results"]["summary"]["question_gn_violations"], 1);
    assert_eq!(
        v["results"]["summary"]["question_gn_examples"][0],
        serde_json::json!([13, 14, 15, 16, 17, 18, 21, 23])
    );
}

#[test]
fn algebra_commands() {
    let (v, _) = json(&["algebra", "sqvero", "6", "2"]);
    assert_eq!(v["results"]["anticanonical"]["p_set"], serde_json::json!([[2, 2, 2]]));
    assert_eq!(v["results"]["classification"]["nearly_gorenstein"], false);

    let (v, _) = json(&["algebra", "segre", "3", "2"]);
    assert_eq!(v["results"]["trace_power"], 1);
    assert_eq!(v["results"]["nearly_gorenstein"], true);

    let (v, _) = json(&["algebra", "veronese", "3", "4", "2"]);
    assert_eq!(v["results"]["witness"], true);
}

#[test]
fn hibi_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"elements": ["a", "b", "c", "d", "e"], "covers": [["a", "b"], ["b", "c"], ["d", "e"]]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (v, text) = json(&["algebra", "hibi", path]);
    assert_eq!(v["results"]["classification"]["nearly_gorenstein"], true);
    assert_eq!(v["results"]["classification"]["gorenstein"], false);
    assert_eq!(v["results"]["structure"]["component_ranks"], serde_json::json!([2, 1]));
    assert_eq!(rerender(&text).unwrap(), text);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"elements": ["a"], "covers": [["a", "z"]]}}"#).unwrap();
    let out = run(&["algebra", "hibi", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["algebra", "hibi", "/nonexistent/poset.json"]);
    assert_eq!(out.status.code(), Some(2));
}
