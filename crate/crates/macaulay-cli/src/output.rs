//! Record emission: JSON lines with every number as a decimal string, or a
//! flat text rendering with the same content.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One self-contained output record; a single line in either format.
#[derive(Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
}

impl OutputRecord {
    pub fn new(command: &'static str, inputs: BTreeMap<String, String>, result: Value) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            result: stringify_numbers(result),
        }
    }
}

/// Replace every JSON number by its decimal string, recursively, so
/// consumers never lose integer width.
fn stringify_numbers(value: Value) -> Value {
    match value {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, stringify_numbers(v)))
                .collect(),
        ),
        other => other,
    }
}

pub fn emit(out: &mut impl Write, format: Format, record: &OutputRecord) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, record)?;
            out.write_all(b"\n")
        }
        Format::Text => writeln!(out, "{}", render_text(record)),
    }
}

fn render_text(record: &OutputRecord) -> String {
    let mut parts = vec![record.command.to_string()];
    for (key, value) in &record.inputs {
        parts.push(format!("{key}={value}"));
    }
    parts.push("->".to_string());
    flatten("", &record.result, &mut parts);
    parts.join(" ")
}

fn flatten(path: &str, value: &Value, out: &mut Vec<String>) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                flatten(&join(key), inner, out);
            }
        }
        Value::Array(items) => {
            for (index, inner) in items.iter().enumerate() {
                flatten(&format!("{path}[{index}]"), inner, out);
            }
        }
        Value::Null => out.push(format!("{path}=null")),
        Value::Bool(b) => out.push(format!("{path}={b}")),
        Value::Number(n) => out.push(format!("{path}={n}")),
        Value::String(s) => out.push(format!("{path}={s}")),
    }
}
