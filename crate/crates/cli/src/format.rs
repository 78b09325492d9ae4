//! Rendering of tables and sequences as plain text, CSV, JSON and b-files.

use lbp_core::{parse_rat, Rat};
use lbp_oeis::SeqFixture;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Right-aligned columns for tables, comma lists for sequences.
    #[default]
    Plain,
    Csv,
    Json,
    /// OEIS b-file lines `n a(n)`; integers only.
    Bfile,
}

/// Something a verb produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    /// Rows of a triangle or square matrix.
    Table(Vec<Vec<Rat>>),
    Sequence(Vec<Rat>),
    /// A J-fraction's `b` and `λ` coefficients.
    Fraction { b: Vec<Rat>, lam: Vec<Rat> },
    Matches(Vec<SeqFixture>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("b-file output needs integers, found {0} at index {1}")]
    NonInteger(String, usize),
    #[error("b-file output is only available for sequences and tables")]
    NotASequence,
    #[error("malformed input: {0}")]
    Malformed(String),
}

fn strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn comma_list(values: &[Rat]) -> String {
    strings(values).join(",")
}

/// Right-aligns every entry to the widest entry of the whole table.
pub fn plain_table(rows: &[Vec<Rat>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| strings(r)).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// `n a(n)` lines starting at 0.
pub fn bfile(values: &[Rat]) -> Result<String, FormatError> {
    let mut out = String::new();
    for (n, v) in values.iter().enumerate() {
        if !v.is_integer() {
            return Err(FormatError::NonInteger(v.to_string(), n));
        }
        out.push_str(&format!("{n} {v}\n"));
    }
    Ok(out)
}

fn json_line(value: Value) -> String {
    format!("{value}\n")
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String, FormatError> {
        Ok(match (self, format) {
            (Output::Table(rows), Format::Plain) => plain_table(rows),
            (Output::Table(rows), Format::Csv) => {
                rows.iter().map(|r| comma_list(r) + "\n").collect()
            }
            (Output::Table(rows), Format::Json) => {
                let rows: Vec<Vec<String>> = rows.iter().map(|r| strings(r)).collect();
                json_line(json!({ "rows": rows }))
            }
            (Output::Table(rows), Format::Bfile) => {
                let flat: Vec<Rat> = rows.iter().flatten().cloned().collect();
                bfile(&flat)?
            }
            (Output::Sequence(terms), Format::Plain | Format::Csv) => comma_list(terms) + "\n",
            (Output::Sequence(terms), Format::Json) => json_line(json!({ "terms": strings(terms) })),
            (Output::Sequence(terms), Format::Bfile) => bfile(terms)?,
            (Output::Fraction { b, lam }, Format::Plain) => {
                format!("b: {}\nlam: {}\n", comma_list(b), comma_list(lam))
            }
            (Output::Fraction { b, lam }, Format::Csv) => {
                format!("{}\n{}\n", comma_list(b), comma_list(lam))
            }
            (Output::Fraction { b, lam }, Format::Json) => {
                json_line(json!({ "b": strings(b), "lam": strings(lam) }))
            }
            (Output::Matches(found), Format::Plain | Format::Csv) => found
                .iter()
                .map(|f| match (&f.name, format) {
                    (Some(name), Format::Plain) => format!("{} {}\n", f.id, name),
                    _ => format!("{}\n", f.id),
                })
                .collect(),
            (Output::Matches(found), Format::Json) => {
                let items: Vec<Value> = found
                    .iter()
                    .map(|f| json!({ "id": f.id, "name": f.name, "source": f.source }))
                    .collect();
                json_line(json!({ "matches": items }))
            }
            (Output::Fraction { .. } | Output::Matches(_), Format::Bfile) => {
                return Err(FormatError::NotASequence)
            }
        })
    }
}

fn rat_cell(text: &str) -> Result<Rat, FormatError> {
    parse_rat(text).map_err(|e| FormatError::Malformed(e.to_string()))
}

/// Reads back the CSV rendering of a table.
pub fn parse_csv_rows(text: &str) -> Result<Vec<Vec<Rat>>, FormatError> {
    text.lines()
        .map(|line| line.split(',').map(rat_cell).collect())
        .collect()
}

/// Reads back `{"rows": [[...]]}`.
pub fn parse_json_rows(text: &str) -> Result<Vec<Vec<Rat>>, FormatError> {
    let bad = |m: &str| FormatError::Malformed(m.to_string());
    let value: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let rows = value.get("rows").and_then(Value::as_array).ok_or_else(|| bad("no rows array"))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("row is not an array"))?
                .iter()
                .map(|cell| rat_cell(cell.as_str().ok_or_else(|| bad("cell is not a string"))?))
                .collect()
        })
        .collect()
}

/// Reads back `{"terms": [...]}`.
pub fn parse_json_terms(text: &str) -> Result<Vec<Rat>, FormatError> {
    let bad = |m: &str| FormatError::Malformed(m.to_string());
    let value: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("no terms array"))?
        .iter()
        .map(|cell| rat_cell(cell.as_str().ok_or_else(|| bad("term is not a string"))?))
        .collect()
}
