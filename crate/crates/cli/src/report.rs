//! The report document shared by every subcommand and its three renderings.
//! JSON is the source of truth; CSV and TeX flatten the payload's table view.

use clap::ValueEnum;
use ospzhu_core::admissible::AdmissiblePair;
use ospzhu_core::exactmath::Rational;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

/// One table entry; rationals render as `num/den` in CSV and `\frac` in TeX.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Rat(Rational),
    Bool(bool),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Rat(r) => r.to_string(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn tex(&self) -> String {
        match self {
            Cell::Rat(r) => format!("${}$", r.to_tex()),
            other => tex_escape(&other.plain()),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Int(n)
    }
}

impl From<&Rational> for Cell {
    fn from(r: &Rational) -> Self {
        Cell::Rat(r.clone())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// `{"p", "q", "level", "command", "payload", "status"}`; `p`, `q` and
/// `level` are null for commands not tied to one pair.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub level: Option<Rational>,
    pub command: String,
    pub payload: Value,
    pub status: Status,
    #[serde(skip)]
    pub table: Table,
}

impl ReportDocument {
    pub fn for_pair(pair: &AdmissiblePair, command: String, payload: Value, status: Status, table: Table) -> Self {
        ReportDocument { p: Some(pair.p), q: Some(pair.q), level: Some(pair.level()), command, payload, status, table }
    }

    pub fn unpaired(command: String, payload: Value, status: Status, table: Table) -> Self {
        ReportDocument { p: None, q: None, level: None, command, payload, status, table }
    }
}

pub fn render(doc: &ReportDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Csv => render_csv(&doc.table),
        Format::Tex => Ok(render_tex(doc)),
    }
}

fn render_csv(table: &Table) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::plain))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_tex(doc: &ReportDocument) -> String {
    let t = &doc.table;
    let mut out = format!("% {}\n", doc.command);
    if let (Some(p), Some(q), Some(level)) = (doc.p, doc.q, &doc.level) {
        out += &format!("% (p, q) = ({p}, {q}), level ${}$\n", level.to_tex());
    }
    out += &format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(t.columns.len()));
    out += &t.columns.iter().map(|c| tex_escape(c)).collect::<Vec<_>>().join(" & ");
    out += " \\\\\n\\hline\n";
    for row in &t.rows {
        out += &row.iter().map(Cell::tex).collect::<Vec<_>>().join(" & ");
        out += " \\\\\n";
    }
    out += "\\end{tabular}\n";
    out
}

fn tex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '\\' => out.push_str("\\textbackslash{}"),
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            _ => out.push(c),
        }
    }
    out
}
