//! Output documents and renderers.
//!
//! Every subcommand produces a single [`CommandOutput`]: a structured JSON
//! payload plus, where the data is naturally tabular, a row view used by the
//! `table` and `csv` renderers.  The JSON envelope is
//!
//! ```text
//! { "schema_version": ..., "command": ..., "payload": ..., "registry_hash": ... }
//! ```
//!
//! where `registry_hash` is the SHA-256 digest of the canonical registry
//! dump, so consumers can pin results to an exact data vintage.  JSON maps
//! are emitted with sorted keys, making every rendering byte-deterministic.

use serde_json::Value;
use sha2::{Digest, Sha256};

use exlie_core::exact_arith::Rat;
use num_traits::ToPrimitive;

/// Version tag of the JSON envelope and payload schemas (see `schemas/`).
pub const SCHEMA_VERSION: &str = "1";

/// Output format selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// JSON envelope with a structured payload (default).
    Json,
    /// Aligned plain-text table (honors the `EXLIE_WIDTH` variable).
    Table,
    /// RFC-4180-style comma-separated values.
    Csv,
}

/// A tabular view of a payload: header row plus data rows.
#[derive(Clone, Debug, Default)]
pub struct Rows {
    /// column headers
    pub headers: Vec<String>,
    /// data cells, one inner vector per row
    pub rows: Vec<Vec<String>>,
}

/// The result of a subcommand: structured payload plus optional row view.
#[derive(Debug)]
pub struct CommandOutput {
    /// JSON payload (goes under `"payload"` in the envelope)
    pub payload: Value,
    /// tabular view for the `table` and `csv` renderers
    pub rows: Option<Rows>,
}

impl CommandOutput {
    /// Payload-only output (tables fall back to pretty JSON).
    #[must_use]
    pub fn new(payload: Value) -> Self {
        CommandOutput { payload, rows: None }
    }

    /// Payload plus a tabular view.
    #[must_use]
    pub fn with_rows(payload: Value, rows: Rows) -> Self {
        CommandOutput { payload, rows: Some(rows) }
    }
}

/// SHA-256 of the canonical registry dump, as lowercase hex.
#[must_use]
pub fn registry_hash() -> String {
    let digest = Sha256::digest(exlie_core::registry::canonical_dump().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Exact rational as a JSON value: a number when it is an `i64` integer,
/// otherwise a `"p/q"` string.  Never a float.
#[must_use]
pub fn rat_json(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::from(r.to_string())
}

/// Render the full envelope in the requested format.
#[must_use]
pub fn render(command: &str, out: &CommandOutput, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "payload": out.payload,
                "registry_hash": registry_hash(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable document");
            s.push('\n');
            s
        }
        Format::Table => match &out.rows {
            Some(rows) => render_table(rows),
            None => {
                let mut s =
                    serde_json::to_string_pretty(&out.payload).expect("serializable payload");
                s.push('\n');
                clip_width(&s)
            }
        },
        Format::Csv => match &out.rows {
            Some(rows) => render_csv(rows),
            None => {
                // Single-record CSV: top-level scalar fields of the payload.
                let mut headers = Vec::new();
                let mut cells = Vec::new();
                if let Value::Object(map) = &out.payload {
                    for (k, v) in map {
                        headers.push(k.clone());
                        cells.push(scalar_cell(v));
                    }
                }
                render_csv(&Rows { headers, rows: vec![cells] })
            }
        },
    }
}

fn scalar_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Maximum output width for the table renderer, from `EXLIE_WIDTH`.
fn max_width() -> Option<usize> {
    std::env::var("EXLIE_WIDTH").ok().and_then(|s| s.trim().parse().ok())
}

fn clip_width(s: &str) -> String {
    let Some(w) = max_width() else { return s.to_string() };
    let mut out = String::new();
    for line in s.lines() {
        if line.chars().count() > w {
            out.extend(line.chars().take(w.saturating_sub(1)));
            out.push('~');
        } else {
            out.push_str(line);
        }
        out.push('\n');
    }
    out
}

fn render_table(rows: &Rows) -> String {
    let ncols = rows.headers.len();
    let mut widths: Vec<usize> = rows.headers.iter().map(|h| h.chars().count()).collect();
    for row in &rows.rows {
        for (i, cell) in row.iter().enumerate().take(ncols) {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<width$}", c, width = widths.get(i).copied().unwrap_or(0)))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &rows.headers);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    emit(&mut out, &rule);
    for row in &rows.rows {
        emit(&mut out, row);
    }
    clip_width(&out)
}

fn render_csv(rows: &Rows) -> String {
    let quote = |cell: &str| -> String {
        if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
            format!("\"{}\"", cell.replace('"', "\"\""))
        } else {
            cell.to_string()
        }
    };
    let mut out = String::new();
    let mut emit = |cells: &[String]| {
        out.push_str(&cells.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    };
    emit(&rows.headers);
    for row in &rows.rows {
        emit(row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exlie_core::exact_arith::{rat, rat_i};

    #[test]
    fn rationals_stay_exact() {
        assert_eq!(rat_json(&rat_i(7)), Value::from(7));
        assert_eq!(rat_json(&rat(-1, 2)), Value::from("-1/2"));
    }

    #[test]
    fn csv_quotes_commas() {
        let rows = Rows {
            headers: vec!["a".into(), "b".into()],
            rows: vec![vec!["x,y".into(), "plain".into()]],
        };
        assert_eq!(render_csv(&rows), "a,b\n\"x,y\",plain\n");
    }

    #[test]
    fn registry_hash_is_hex64() {
        let h = registry_hash();
        assert_eq!(h.len(), 64);
        assert!(h.chars().all(|c| c.is_ascii_hexdigit()));
    }
}
