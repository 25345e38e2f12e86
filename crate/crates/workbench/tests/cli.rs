use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn pairops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairops"))
        .args(args)
        .output()
        .expect("pairops binary runs")
}

/// Writes `text` to a fresh file under the target directory.
fn workspace_file(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, text).unwrap();
    path
}

fn run(name: &str, text: &str, extra: &[&str]) -> Output {
    let path = workspace_file(name, text);
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    pairops(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const R3_BF: &str = r#"{"field": {"char": 2},
  "rings": [{"name": "R3", "vars": ["x", "y"], "relations": ["x^2", "y^2"], "nil_bound": 4}],
  "operations": [{"name": "bf_m", "kind": "bf", "params": {"ideal": "m"}}],
  "tasks": [
    {"kind": "eval", "ring": "R3", "operation": "bf_m", "submodule": "(x)"},
    {"kind": "props", "ring": "R3", "operation": "bf_m"}
  ]}"#;

#[test]
fn empty_workspace_gives_empty_report() {
    let o = run("empty", r#"{"field": {"char": 2}, "rings": []}"#, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"tasks\":[]}\n");
}

#[test]
fn eval_bf_m_of_x_in_r3() {
    let o = run("eval", R3_BF, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value = &v["tasks"][0]["result"]["value"];
    assert_eq!(value["generators"], serde_json::json!(["x", "y", "x*y"]));
    assert_eq!(value["ideal"], "m");
    assert_eq!(
        value["basis"],
        serde_json::json!([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    );
}

#[test]
fn bf_m_is_not_residual_on_r3() {
    let o = run("props", R3_BF, &[]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["tasks"][1]["result"]["properties"].as_array().unwrap();
    let residual = rows.iter().find(|r| r["property"] == "residual").unwrap();
    assert_eq!(residual["verdict"], "FAIL");
    assert!(residual["detail"]
        .as_str()
        .unwrap()
        .starts_with("quotient pair (N/L, M/L) = (0, R/(x*y))"));
}

#[test]
fn property_table_text_matches_golden_file() {
    let text = R3_BF.replace(
        r#"{"kind": "eval", "ring": "R3", "operation": "bf_m", "submodule": "(x)"},"#,
        "",
    );
    let o = run("golden", &text, &["--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/props_bf_m_r3.txt"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let fixtures = String::from_utf8(pairops(&["fixtures"]).stdout).unwrap();
    let a = run("fixtures_a", &fixtures, &[]);
    let b = run("fixtures_b", &fixtures, &[]);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_and_json_carry_the_same_data() {
    let json = stdout(&run("same_json", R3_BF, &[]));
    let text = stdout(&run("same_text", R3_BF, &["--format", "text"]));
    let v: Value = serde_json::from_str(&json).unwrap();
    for row in v["tasks"][1]["result"]["properties"].as_array().unwrap() {
        assert!(text.contains(row["property"].as_str().unwrap()));
        if let Some(d) = row["detail"].as_str() {
            assert!(text.contains(d), "{d}");
        }
    }
}

#[test]
fn out_flag_writes_the_report() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("report.json");
    let o = run("out", R3_BF, &["--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["tasks"].as_array().unwrap().len(), 2);
}

#[test]
fn bounds_flags_and_timing() {
    let o = run("bounds", R3_BF, &["--max-dim", "4", "--timing"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for t in v["tasks"].as_array().unwrap() {
        assert_eq!(t["bounds"]["max_dim"], 4);
        assert!(t["elapsed_ms"].is_u64());
    }
    let o = run("no_timing", R3_BF, &[]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["tasks"][0].get("elapsed_ms").is_none());
}

#[test]
fn unresolved_ring_exits_two() {
    let text = R3_BF.replace(
        r#""ring": "R3", "operation": "bf_m"}"#,
        r#""ring": "S", "operation": "bf_m"}"#,
    );
    let o = run("unresolved", &text, &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("E-UNRESOLVED") && err.contains("\"S\""),
        "{err}"
    );
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(pairops(&[]).status.code(), Some(2));
    assert_eq!(pairops(&["run"]).status.code(), Some(2));
    assert_eq!(
        pairops(&["run", "ws.json", "--format", "yaml"])
            .status
            .code(),
        Some(2)
    );
    // Missing file.
    let o = pairops(&["run", "/nonexistent/ws.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("E-IO"));
    // A syntax error.
    let o = run("syntax", "{\"field\": ", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("E-SYNTAX"));
    // A task that errors is a check failure, not a usage error.
    let text = r#"{"field": {"char": 2},
      "rings": [{"name": "R2", "vars": ["x", "y"], "relations": ["x^2", "x*y", "y^2"], "nil_bound": 2}],
      "operations": [{"name": "fr", "kind": "frobenius"}],
      "tasks": [{"kind": "eval", "ring": "R2", "operation": "fr", "module": "E", "submodule": "0"}]}"#;
    assert_eq!(run("failing", text, &[]).status.code(), Some(1));
    assert_eq!(pairops(&["--help"]).status.code(), Some(0));
}

#[test]
fn fixtures_command_prints_a_valid_workspace() {
    let o = pairops(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    let ws = pairops::parse_workspace(&stdout(&o)).unwrap();
    assert_eq!(ws.rings.len(), 4);
}
