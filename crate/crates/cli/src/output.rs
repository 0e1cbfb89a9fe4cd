//! Rendering of command results as JSON, CSV or plain text.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "charlier-lab/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// A header row and string cells.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// What a command produced, in every format.
#[derive(Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub default_format: Format,
    pub params: Value,
    pub json: Value,
    pub table: Table,
    pub plain: String,
    /// Set when a check failed; the process then exits with status 1.
    pub failure: Option<String>,
}

/// 17 significant digits.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt_real(x: Option<f64>) -> String {
    x.map(real).unwrap_or_default()
}

pub fn render(outcome: &Outcome, format: Format) -> Result<Vec<u8>> {
    Ok(match format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": outcome.command,
                "params": outcome.params,
                "result": outcome.json,
            });
            let mut text = serde_json::to_string_pretty(&doc)?;
            text.push('\n');
            text.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&outcome.table.header)?;
            for row in &outcome.table.rows {
                w.write_record(row)?;
            }
            w.into_inner().map_err(|e| CliError::Io {
                path: PathBuf::from("<csv buffer>"),
                source: e.into_error(),
            })?
        }
        Format::Plain => outcome.plain.clone().into_bytes(),
    })
}

pub fn emit(outcome: &Outcome, format: Option<Format>, out: Option<&Path>) -> Result<()> {
    let bytes = render(outcome, format.unwrap_or(outcome.default_format))?;
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(&bytes)
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_carry_seventeen_digits() {
        assert_eq!(real(0.1), "1.0000000000000001e-1");
        assert_eq!(real(4.0), "4.0000000000000000e0");
        assert_eq!(real(-2.5e-300).parse::<f64>().unwrap(), -2.5e-300);
    }

    #[test]
    fn csv_quotes_cells_with_commas() {
        let mut table = Table::new(["a", "b"]);
        table.push(vec!["(1,2)".into(), "x".into()]);
        let outcome = Outcome {
            command: "t",
            default_format: Format::Csv,
            params: Value::Null,
            json: Value::Null,
            table,
            plain: String::new(),
            failure: None,
        };
        let text = String::from_utf8(render(&outcome, Format::Csv).unwrap()).unwrap();
        assert_eq!(text, "a,b\n\"(1,2)\",x\n");
    }
}
