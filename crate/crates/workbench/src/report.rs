//! Reports and their JSON and text renderings.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskStatus {
    /// Ran, and every asserted check held.
    Ok,
    /// Ran, and an asserted check failed.
    Failed,
    /// Did not produce a result.
    Error,
}

impl TaskStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TaskStatus::Ok => "ok",
            TaskStatus::Failed => "failed",
            TaskStatus::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub kind: String,
    pub status: TaskStatus,
    pub bounds: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub tasks: Vec<TaskReport>,
}

impl Report {
    /// Whether every task ran and every asserted check held.
    pub fn all_ok(&self) -> bool {
        self.tasks.iter().all(|t| t.status == TaskStatus::Ok)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Compact JSON with keys sorted, or the text rendering of the same data.
pub fn emit_report<T: Serialize>(r: &T, format: Format) -> String {
    // Going through `Value` sorts every object's keys.
    let v = serde_json::to_value(r).expect("reports serialize");
    match format {
        Format::Json => serde_json::to_string(&v).expect("values serialize"),
        Format::Text => {
            let mut out = String::new();
            render(&mut out, &v, 0);
            out
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(flat).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn pad(n: usize) -> String {
    " ".repeat(n)
}

fn render(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{}{k}: {}\n", pad(indent), flat(x)));
                } else if let Some(rows) = table_rows(x) {
                    out.push_str(&format!("{}{k}:\n", pad(indent)));
                    render_table(out, &rows, indent + 2);
                } else {
                    out.push_str(&format!("{}{k}:\n", pad(indent)));
                    render(out, x, indent + 2);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                out.push_str(&format!("{}-\n", pad(indent)));
                render(out, x, indent + 2);
            }
        }
        other => out.push_str(&format!("{}{}\n", pad(indent), scalar(other))),
    }
}

/// Arrays of objects keyed by `property` render as aligned tables.
fn table_rows(v: &Value) -> Option<Vec<&serde_json::Map<String, Value>>> {
    let items = v.as_array()?;
    let rows: Vec<_> = items.iter().filter_map(|x| x.as_object()).collect();
    if rows.is_empty()
        || rows.len() != items.len()
        || !rows.iter().all(|r| r.contains_key("property") && r.values().all(is_flat))
    {
        return None;
    }
    Some(rows)
}

fn render_table(out: &mut String, rows: &[&serde_json::Map<String, Value>], indent: usize) {
    let width = rows
        .iter()
        .map(|r| scalar(&r["property"]).len())
        .max()
        .unwrap_or(0);
    for r in rows {
        let verdict = r.get("verdict").map(scalar).unwrap_or_default();
        let rest: Vec<String> = r
            .iter()
            .filter(|(k, _)| *k != "property" && *k != "verdict")
            .map(|(k, x)| format!("{k}={}", flat(x)))
            .collect();
        let line = format!(
            "{}{:width$}  {:7}  {}",
            pad(indent),
            scalar(&r["property"]),
            verdict,
            rest.join("  ")
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
}
