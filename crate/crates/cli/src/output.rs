//! Output plumbing: metadata-prefixed CSV and its JSON mirror.
//!
//! Floats are written with the shortest round-trip decimal representation,
//! so identical inputs produce byte-identical files and JSON re-parses to
//! the exact in-memory values.

use std::path::Path;

use serde::Serialize;

/// Writes to the path, or stdout when none is given.
pub fn emit(out: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// CSV table: `# key: value` metadata lines, a column header, then rows.
pub struct CsvTable {
    meta: Vec<(String, String)>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            meta: Vec::new(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl std::fmt::Display) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON mirror: metadata object plus one object per row with the same
    /// field names as the CSV columns.
    pub fn to_json(&self) -> String {
        let meta: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, cell) in self.header.iter().zip(row) {
                    let value = match cell.parse::<f64>() {
                        Ok(x) if cell != "nan" => serde_json::json!(x),
                        _ => serde_json::Value::String(cell.clone()),
                    };
                    obj.insert((*name).to_string(), value);
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "metadata": meta, "rows": rows });
        let mut text = serde_json::to_string_pretty(&doc).expect("json serialization");
        text.push('\n');
        text
    }

    pub fn render(&self, format: crate::Format) -> String {
        match format {
            crate::Format::Csv => self.to_csv(),
            crate::Format::Json => self.to_json(),
        }
    }
}

/// Renders a report struct either as pretty JSON or as `key,value` CSV.
pub fn render_report<T: Serialize>(report: &T, format: crate::Format) -> anyhow::Result<String> {
    match format {
        crate::Format::Json => {
            let mut text = serde_json::to_string_pretty(report)?;
            text.push('\n');
            Ok(text)
        }
        crate::Format::Csv => {
            let value = serde_json::to_value(report)?;
            let obj = value
                .as_object()
                .ok_or_else(|| anyhow::anyhow!("report is not a key-value object"))?;
            let mut out = String::from("key,value\n");
            for (k, v) in obj {
                let rendered = match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k},{rendered}\n"));
            }
            Ok(out)
        }
    }
}

pub fn fmt_f64(x: f64) -> String {
    // Canonicalize the sign of zero so tables never show "-0".
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}
