use pairops::workspace::{Position, TaskKind};
use pairops::{
    execute_tasks, parse_workspace, ErrorCode, ExecOptions, TaskStatus, FIXTURE_WORKSPACE,
};

const R3_HEADER: &str = r#""field": {"char": 2},
  "rings": [{"name": "R3", "vars": ["x", "y"], "relations": ["x^2", "y^2"], "nil_bound": 4}],
  "operations": [
    {"name": "bf_m", "kind": "bf", "params": {"ideal": "m"}},
    {"name": "be_m", "kind": "be", "params": {"ideal": "m"}}
  ]"#;

fn with_tasks(tasks: &str) -> String {
    format!("{{{R3_HEADER}, \"tasks\": [{tasks}]}}")
}

fn error_of(text: &str) -> (ErrorCode, Position, String) {
    let e = parse_workspace(text).expect_err("workspace should be rejected");
    (e.code, e.position, e.message)
}

#[test]
fn fixture_workspace_has_four_rings_and_one_task() {
    let ws = parse_workspace(FIXTURE_WORKSPACE).unwrap();
    let names: Vec<&str> = ws.rings.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["R1", "R2", "R3", "R4"]);
    assert_eq!(ws.tasks.len(), 1);
    assert_eq!(ws.tasks[0].kind, TaskKind::DualityTable);
}

#[test]
fn minimal_eval_workspace_parses() {
    let text = r#"{"field": {"char": 2},
      "rings": [{"name": "R1", "vars": ["x"], "relations": ["x^2"], "nil_bound": 2}],
      "operations": [{"name": "bf_m", "kind": "bf", "params": {"ideal": "m"}}],
      "tasks": [{"kind": "eval", "ring": "R1", "operation": "bf_m", "submodule": "(x)"}]}"#;
    assert_eq!(parse_workspace(text).unwrap().tasks.len(), 1);
}

#[test]
fn canonical_form_round_trips() {
    for text in [
        FIXTURE_WORKSPACE.to_string(),
        with_tasks(r#"{"kind": "props", "ring": "R3", "operation": "bf_m"}"#),
    ] {
        let ws = parse_workspace(&text).unwrap();
        let again = parse_workspace(&ws.to_canonical_json()).unwrap();
        assert_eq!(again, ws);
        assert_eq!(again.to_canonical_json(), ws.to_canonical_json());
    }
}

#[test]
fn unknown_ring_is_unresolved() {
    let (code, pos, msg) = error_of(&with_tasks(
        r#"{"kind": "props", "ring": "S", "operation": "bf_m"}"#,
    ));
    assert_eq!(code, ErrorCode::Unresolved);
    assert_eq!(pos, Position::Path("tasks[0].ring".into()));
    assert!(msg.contains("\"S\""), "{msg}");
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let (code, pos, _) = error_of("{\n  \"field\": {\"char\": 2},\n  \"rings\": [,]\n}");
    assert_eq!(code, ErrorCode::Syntax);
    assert_eq!(
        pos,
        Position::LineColumn {
            line: 3,
            column: 13
        }
    );
}

#[test]
fn schema_errors() {
    let (code, _, _) = error_of(r#"{"field": {"char": 2}, "rings": [], "colour": 1}"#);
    assert_eq!(code, ErrorCode::Schema);
    let (code, _, _) = error_of(r#"{"field": {"char": "two"}, "rings": []}"#);
    assert_eq!(code, ErrorCode::Schema);
    let (code, pos, _) = error_of(&with_tasks(
        r#"{"kind": "eval", "ring": "R3", "operation": "bf_m"}"#,
    ));
    assert_eq!(code, ErrorCode::Schema);
    assert_eq!(pos, Position::Path("tasks[0].submodule".into()));
}

#[test]
fn duplicates_cycles_and_bad_polynomials() {
    let dup = r#"{"field": {"char": 2}, "rings": [
        {"name": "A", "vars": ["x"], "relations": ["x^2"], "nil_bound": 2},
        {"name": "A", "vars": ["x"], "relations": ["x^3"], "nil_bound": 3}]}"#;
    assert_eq!(error_of(dup).0, ErrorCode::Duplicate);

    let cycle = r#"{"field": {"char": 2},
      "rings": [{"name": "R1", "vars": ["x"], "relations": ["x^2"], "nil_bound": 2}],
      "operations": [
        {"name": "a", "kind": "join", "params": {"operations": ["b"]}},
        {"name": "b", "kind": "meet", "params": {"operations": ["a"]}}]}"#;
    assert_eq!(error_of(cycle).0, ErrorCode::Cycle);

    let poly = r#"{"field": {"char": 2},
      "rings": [{"name": "R1", "vars": ["x"], "relations": ["x^^2"], "nil_bound": 2}]}"#;
    assert_eq!(error_of(poly).0, ErrorCode::Polynomial);

    let not_local = r#"{"field": {"char": 2},
      "rings": [{"name": "R1", "vars": ["x"], "relations": ["x^2"], "nil_bound": 1}]}"#;
    assert_eq!(error_of(not_local).0, ErrorCode::Ring);

    let rationals = r#"{"field": {"char": 0},
      "rings": [{"name": "Q", "vars": ["x"], "relations": ["x^2"], "nil_bound": 2}]}"#;
    assert_eq!(error_of(rationals).0, ErrorCode::Field);
}

#[test]
fn cross_ring_references_are_rejected() {
    let text = r#"{"field": {"char": 2},
      "rings": [
        {"name": "R1", "vars": ["x"], "relations": ["x^2"], "nil_bound": 2},
        {"name": "R3", "vars": ["x", "y"], "relations": ["x^2", "y^2"], "nil_bound": 4}],
      "ideals": [{"name": "I", "ring": "R1", "generators": ["x"]}],
      "operations": [{"name": "bf_i", "kind": "bf", "params": {"ideal": "I"}}],
      "tasks": [{"kind": "props", "ring": "R3", "operation": "bf_i"}]}"#;
    assert_eq!(error_of(text).0, ErrorCode::RingMismatch);
}

#[test]
fn every_task_kind_runs() {
    let tasks = [
        r#"{"kind": "eval", "ring": "R3", "operation": "bf_m", "submodule": "(x)"}"#,
        r#"{"kind": "props", "ring": "R3", "operation": "be_m"}"#,
        r#"{"kind": "dual_check", "ring": "R3", "operation": "bf_m"}"#,
        r#"{"kind": "core", "ring": "R3", "operation": "bf_m", "submodule": "m"}"#,
        r#"{"kind": "hull", "ring": "R3", "closure": "bf_m", "submodule": "socle"}"#,
        r#"{"kind": "test_ideal", "ring": "R3", "operation": "bf_m", "mode": "big"}"#,
        r#"{"kind": "test_ideal", "ring": "R3", "operation": "bf_m", "mode": "chain"}"#,
        r#"{"kind": "duality_table", "rings": ["R3"], "operations": ["bf_m"]}"#,
        r#"{"kind": "fixtures"}"#,
        r#"{"kind": "hull_formula", "ring": "R3", "closure": "bf_m", "i": "m", "j": "m"}"#,
    ];
    let ws = parse_workspace(&with_tasks(&tasks.join(","))).unwrap();
    let report = execute_tasks(&ws, ExecOptions::default()).unwrap();
    assert_eq!(report.tasks.len(), tasks.len());
    for t in &report.tasks {
        assert_eq!(
            t.status,
            TaskStatus::Ok,
            "task {} ({}): {:?}",
            t.index,
            t.kind,
            t.error
        );
        assert!(t.elapsed_ms.is_none());
    }
}

#[test]
fn task_failures_do_not_abort_later_tasks() {
    // Frobenius needs an ambient module isomorphic to the ring, and E is
    // not cyclic over R2.
    let text = r#"{"field": {"char": 2},
      "rings": [{"name": "R2", "vars": ["x", "y"], "relations": ["x^2", "x*y", "y^2"], "nil_bound": 2}],
      "operations": [
        {"name": "fr", "kind": "frobenius"},
        {"name": "bf_m", "kind": "bf", "params": {"ideal": "m"}}],
      "tasks": [
        {"kind": "eval", "ring": "R2", "operation": "fr", "module": "E", "submodule": "0"},
        {"kind": "eval", "ring": "R2", "operation": "bf_m", "submodule": "(x)"}]}"#;
    let report = execute_tasks(&parse_workspace(text).unwrap(), ExecOptions::default()).unwrap();
    assert_eq!(report.tasks[0].status, TaskStatus::Error);
    assert!(report.tasks[0].error.is_some());
    assert_eq!(report.tasks[1].status, TaskStatus::Ok);
    assert!(!report.all_ok());
}
