//! Every command builds all three renderings; the configured format picks one.

use serde_json::{json, Map, Value};

use crate::config::OutputFormat;

#[derive(Debug, Clone)]
pub struct Output {
    /// JSON object; a `timestamp` key is added at render time when enabled.
    pub json: Map<String, Value>,
    pub text: String,
    pub csv: String,
}

impl Output {
    pub fn render(mut self, format: OutputFormat, timestamp: bool) -> String {
        match format {
            OutputFormat::Json => {
                if timestamp {
                    let now = time::OffsetDateTime::now_utc()
                        .replace_nanosecond(0)
                        .expect("zero is a valid nanosecond")
                        .format(&time::format_description::well_known::Rfc3339)
                        .expect("RFC 3339 formats every UTC instant");
                    self.json.insert("timestamp".into(), Value::String(now));
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json))
                    .expect("JSON values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.csv,
            OutputFormat::Text => self.text,
        }
    }
}

/// A sequence of terms: comma-joined text, one value per CSV line, and a
/// JSON array of decimal strings.
pub fn terms(command: &str, fields: Map<String, Value>, terms: Vec<String>) -> Output {
    let mut json = Map::new();
    json.insert("command".into(), json!(command));
    json.extend(fields);
    json.insert("terms".into(), json!(terms));
    Output {
        json,
        text: format!("{}\n", terms.join(",")),
        csv: terms.iter().map(|t| format!("{t}\n")).collect(),
    }
}

/// A table with named columns; `text` is left-aligned with two-space gaps.
pub fn table(
    command: &str,
    fields: Map<String, Value>,
    columns: &[&str],
    rows: Vec<Vec<String>>,
) -> Output {
    let mut json = Map::new();
    json.insert("command".into(), json!(command));
    json.extend(fields);
    let objects: Vec<Value> = rows
        .iter()
        .map(|row| {
            Value::Object(
                columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), Value::String(v.clone())))
                    .collect(),
            )
        })
        .collect();
    json.insert("rows".into(), Value::Array(objects));
    Output {
        json,
        text: aligned(columns, &rows),
        csv: csv_text(columns, &rows),
    }
}

fn aligned(columns: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..columns.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([columns[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(
        columns
            .iter()
            .map(|c| c.to_uppercase())
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

pub fn csv_text(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 fields")
}
