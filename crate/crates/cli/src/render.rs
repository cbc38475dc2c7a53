//! Output formats for classes and tables.

use std::str::FromStr;

use serde_json::{json, Value};
use trace_divisors::affine::AffineExpr;
use trace_divisors::{DivisorClass, Normalization, Rational};

use crate::json::class_to_json;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            other => Err(CliError::usage(format!("unknown format `{other}`"))),
        }
    }
}

/// Coefficient text: `p/q` for constants, `p/q+p/q*c_1-...` otherwise.
pub fn affine_text(e: &AffineExpr) -> String {
    match e.as_constant() {
        Some(c) => c.to_string(),
        None => e.to_string(),
    }
}

/// Coefficients sorted by generator name.
fn sorted_terms(d: &DivisorClass) -> Vec<(String, String)> {
    let mut rows: Vec<(String, String)> = d
        .terms()
        .map(|(g, e)| (g.to_string(), affine_text(e)))
        .collect();
    rows.sort();
    rows
}

pub fn render_class(
    d: &DivisorClass,
    norm: Normalization,
    format: OutputFormat,
) -> CliResult<String> {
    match format {
        OutputFormat::Json => Ok(class_to_json(d, norm)),
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            for (g, c) in sorted_terms(d) {
                w.write_record([g, c])?;
            }
            csv_string(w)
        }
        OutputFormat::Md => {
            let mut out = String::from("| generator | coefficient |\n|---|---|\n");
            for (g, c) in sorted_terms(d) {
                out.push_str(&format!("| {g} | {c} |\n"));
            }
            Ok(out)
        }
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    Rat(Rational),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Rat(r) => r.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => json!(n),
            Cell::Rat(r) => json!(r.to_string()),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Int(n)
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Int(n.into())
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub quantity: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn render(&self, format: OutputFormat) -> CliResult<String> {
        match format {
            OutputFormat::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
                    .collect();
                let doc = json!({
                    "schema": "table/1",
                    "quantity": self.quantity,
                    "columns": self.columns,
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&doc)?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::text))?;
                }
                csv_string(w)
            }
            OutputFormat::Md => {
                let mut out = format!(
                    "| {} |\n|{}\n",
                    self.columns.join(" | "),
                    "---|".repeat(self.columns.len())
                );
                for row in &self.rows {
                    let cells: Vec<String> =
                        row.iter().map(|c| c.text().replace('|', "\\|")).collect();
                    out.push_str(&format!("| {} |\n", cells.join(" | ")));
                }
                Ok(out)
            }
        }
    }
}
