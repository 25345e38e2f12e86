//! The workspace file: a JSON document declaring rings, ideals, modules,
//! operations and tasks.
//!
//! Parsing validates the whole document up front, so every unresolved name,
//! malformed polynomial or ill-formed ring is reported before any task
//! runs. Errors carry a stable code and either a line/column (JSON syntax
//! and shape) or a path such as `operations[2].params.ideal`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::session::Session;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ErrorCode {
    /// Not valid JSON.
    Syntax,
    /// Valid JSON that does not fit the schema.
    Schema,
    /// A name that is declared twice.
    Duplicate,
    /// A reference to an undeclared name.
    Unresolved,
    /// Operations that refer to each other in a cycle.
    Cycle,
    /// A reference to an object declared over a different ring.
    RingMismatch,
    /// A polynomial or submodule string that does not parse.
    Polynomial,
    /// A ring whose relations do not define a local algebra.
    Ring,
    /// A field the workbench cannot enumerate over.
    Field,
    /// A file that could not be read or written.
    Io,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "E-SYNTAX",
            ErrorCode::Schema => "E-SCHEMA",
            ErrorCode::Duplicate => "E-DUPLICATE",
            ErrorCode::Unresolved => "E-UNRESOLVED",
            ErrorCode::Cycle => "E-CYCLE",
            ErrorCode::RingMismatch => "E-RING-MISMATCH",
            ErrorCode::Polynomial => "E-POLY",
            ErrorCode::Ring => "E-RING",
            ErrorCode::Field => "E-FIELD",
            ErrorCode::Io => "E-IO",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where in the document an error was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Position {
    LineColumn { line: usize, column: usize },
    Path(String),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{code} {}: {message}", display_position(.position))]
pub struct WorkspaceError {
    pub code: ErrorCode,
    pub position: Position,
    pub message: String,
}

fn display_position(p: &Position) -> String {
    match p {
        Position::LineColumn { line, column } => format!("at line {line}, column {column}"),
        Position::Path(path) => format!("at {path}"),
        Position::None => "in workspace".into(),
    }
}

impl WorkspaceError {
    pub fn at(code: ErrorCode, path: impl Into<String>, message: impl Into<String>) -> Self {
        WorkspaceError {
            code,
            position: Position::Path(path.into()),
            message: message.into(),
        }
    }
}

fn is_default<T: Default + PartialEq>(t: &T) -> bool {
    *t == T::default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub char: u32,
}

/// Enumeration bounds; missing entries take the defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_submodules: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDecl {
    pub name: String,
    /// Overrides the workspace field for this ring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u32>,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub nil_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDecl {
    pub name: String,
    pub ring: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    Regular,
    Hull,
    ResidueField,
    Quotient,
    Ideal,
    Dual,
    DirectSum,
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub name: String,
    pub ring: String,
    pub kind: ModuleKind,
    /// For `quotient` and `ideal`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    /// For `dual`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    /// For `direct_sum`.
    #[serde(default, skip_serializing_if = "is_default")]
    pub modules: Vec<String>,
    /// For `free`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperationKind {
    Bf,
    Be,
    ModuleClosure,
    Trace,
    Frobenius,
    Rho,
    Gamma,
    Meet,
    Join,
    Finitistic,
    CohereditaryVersion,
    HereditaryVersion,
    SmileDual,
    Identity,
    ZeroInterior,
    CustomTable,
}

/// One generator: a polynomial string, or raw coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Generator {
    Poly(String),
    Coords(Vec<u32>),
}

/// A submodule: a keyword (`0`, `full`, `socle`, `radical`), an ideal
/// (`m`, a declared ideal name or an inline `(x, y)`, meaning `I M`), or a
/// list of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubmoduleSpec {
    Named(String),
    Generators(Vec<Generator>),
}

/// A subset `S ⊆ L` for module closures and traces: `"basis"` or a list of
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubsetSpec {
    Keyword(String),
    Elements(Vec<Generator>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRule {
    pub bound: String,
    pub value: String,
}

/// A submodule selector: `socle`, `radical`, `zero`, `full`, or
/// `{"at_zero": op}` for `M ↦ p(0, M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SelectorSpec {
    Named(String),
    AtZero { at_zero: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<SubsetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selector: Option<SelectorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operation: Option<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub operations: Vec<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub rules: Vec<TableRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationDecl {
    pub name: String,
    pub kind: OperationKind,
    #[serde(default, skip_serializing_if = "is_default")]
    pub params: OperationParams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskKind {
    Eval,
    Props,
    DualCheck,
    Core,
    Hull,
    TestIdeal,
    DualityTable,
    Fixtures,
    HullFormula,
}

impl TaskKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TaskKind::Eval => "eval",
            TaskKind::Props => "props",
            TaskKind::DualCheck => "dual_check",
            TaskKind::Core => "core",
            TaskKind::Hull => "hull",
            TaskKind::TestIdeal => "test_ideal",
            TaskKind::DualityTable => "duality_table",
            TaskKind::Fixtures => "fixtures",
            TaskKind::HullFormula => "hull_formula",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestIdealModeSpec {
    Big,
    Finitistic,
    Enumerated,
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDecl {
    pub kind: TaskKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub rings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operation: Option<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub operations: Vec<String>,
    /// For `hull` and `hull_formula`: the closure whose dual is the interior.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodule: Option<SubmoduleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<TestIdealModeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

impl TaskDecl {
    pub fn new(kind: TaskKind) -> Self {
        TaskDecl {
            kind,
            ring: None,
            rings: Vec::new(),
            operation: None,
            operations: Vec::new(),
            closure: None,
            module: None,
            submodule: None,
            mode: None,
            i: None,
            j: None,
            n: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Workspace {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "is_default")]
    pub bounds: BoundsSpec,
    pub rings: Vec<RingDecl>,
    #[serde(default)]
    pub ideals: Vec<IdealDecl>,
    #[serde(default)]
    pub modules: Vec<ModuleDecl>,
    #[serde(default)]
    pub operations: Vec<OperationDecl>,
    #[serde(default)]
    pub tasks: Vec<TaskDecl>,
}

impl Workspace {
    /// Pretty-printed JSON in schema order; parses back to `self`.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("workspace serializes")
    }
}

/// Parses and validates a workspace document.
pub fn parse_workspace(text: &str) -> Result<Workspace, WorkspaceError> {
    let ws: Workspace = serde_json::from_str(text).map_err(|e| {
        let code = match e.classify() {
            serde_json::error::Category::Syntax | serde_json::error::Category::Eof => {
                ErrorCode::Syntax
            }
            _ => ErrorCode::Schema,
        };
        WorkspaceError {
            code,
            position: Position::LineColumn {
                line: e.line(),
                column: e.column(),
            },
            message: strip_position(&e.to_string()),
        }
    })?;
    validate(&ws)?;
    Ok(ws)
}

fn strip_position(s: &str) -> String {
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s.to_string(),
    }
}

fn check_unique<'a>(
    kind: &str,
    names: impl Iterator<Item = &'a str>,
) -> Result<(), WorkspaceError> {
    let mut seen = BTreeSet::new();
    for (i, name) in names.enumerate() {
        if name.is_empty() {
            return Err(WorkspaceError::at(
                ErrorCode::Schema,
                format!("{kind}[{i}].name"),
                "names must be nonempty",
            ));
        }
        if !seen.insert(name) {
            return Err(WorkspaceError::at(
                ErrorCode::Duplicate,
                format!("{kind}[{i}].name"),
                format!("{name:?} is declared twice"),
            ));
        }
    }
    Ok(())
}

fn validate(ws: &Workspace) -> Result<(), WorkspaceError> {
    check_unique("rings", ws.rings.iter().map(|r| r.name.as_str()))?;
    check_unique("ideals", ws.ideals.iter().map(|r| r.name.as_str()))?;
    check_unique("modules", ws.modules.iter().map(|r| r.name.as_str()))?;
    check_unique("operations", ws.operations.iter().map(|r| r.name.as_str()))?;
    check_operation_graph(ws)?;
    // Building the session resolves every declaration.
    let session = Session::new(ws)?;
    for (i, op) in ws.operations.iter().enumerate() {
        session.check_operation_params(op, &format!("operations[{i}]"))?;
    }
    for (i, task) in ws.tasks.iter().enumerate() {
        session.check_task(task, &format!("tasks[{i}]"))?;
    }
    Ok(())
}

/// Operations referenced by an operation's parameters.
pub(crate) fn operation_refs(op: &OperationDecl) -> Vec<(String, String)> {
    let mut out = Vec::new();
    if let Some(o) = &op.params.operation {
        out.push(("params.operation".to_string(), o.clone()));
    }
    for (k, o) in op.params.operations.iter().enumerate() {
        out.push((format!("params.operations[{k}]"), o.clone()));
    }
    if let Some(SelectorSpec::AtZero { at_zero }) = &op.params.selector {
        out.push(("params.selector.at_zero".to_string(), at_zero.clone()));
    }
    out
}

fn check_operation_graph(ws: &Workspace) -> Result<(), WorkspaceError> {
    let index: BTreeMap<&str, usize> = ws
        .operations
        .iter()
        .enumerate()
        .map(|(i, o)| (o.name.as_str(), i))
        .collect();
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); ws.operations.len()];
    for (i, op) in ws.operations.iter().enumerate() {
        for (field, target) in operation_refs(op) {
            match index.get(target.as_str()) {
                Some(&j) => edges[i].push(j),
                None => {
                    return Err(WorkspaceError::at(
                        ErrorCode::Unresolved,
                        format!("operations[{i}].{field}"),
                        format!("undeclared operation {target:?}"),
                    ))
                }
            }
        }
    }
    // 0 = unvisited, 1 = on the stack, 2 = done.
    let mut state = vec![0u8; edges.len()];
    fn visit(
        v: usize,
        edges: &[Vec<usize>],
        state: &mut [u8],
        ws: &Workspace,
    ) -> Result<(), WorkspaceError> {
        state[v] = 1;
        for &w in &edges[v] {
            if state[w] == 1 {
                return Err(WorkspaceError::at(
                    ErrorCode::Cycle,
                    format!("operations[{v}]"),
                    format!(
                        "{:?} refers back to {:?}",
                        ws.operations[v].name, ws.operations[w].name
                    ),
                ));
            }
            if state[w] == 0 {
                visit(w, edges, state, ws)?;
            }
        }
        state[v] = 2;
        Ok(())
    }
    for v in 0..edges.len() {
        if state[v] == 0 {
            visit(v, &edges, &mut state, ws)?;
        }
    }
    Ok(())
}

/// The built-in workspace declaring the four test rings.
pub const FIXTURE_WORKSPACE: &str = include_str!("../fixtures/fixtures.json");
