//! Tabular output in text, JSON or CSV, and verification reports.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::format::int_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(BigInt),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x.into())
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x.into())
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x.into())
    }
}

impl From<BigInt> for Cell {
    fn from(x: BigInt) -> Self {
        Cell::Int(x)
    }
}

impl From<&BigInt> for Cell {
    fn from(x: &BigInt) -> Self {
        Cell::Int(x.clone())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.into())
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(x) => int_value(x),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

/// A titled table; JSON output is an array of objects keyed by column.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let m: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                    Value::Object(m)
                })
                .collect(),
        )
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(&self.to_json()).unwrap() + "\n",
            OutputFormat::Csv => {
                let mut out = self.columns.join(",") + "\n";
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(|c| csv_escape(&c.text())).collect();
                    out += &(cells.join(",") + "\n");
                }
                out
            }
            OutputFormat::Text => {
                let texts: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| texts.iter().map(|r| r[c].chars().count()).chain([self.columns[c].chars().count()]).max().unwrap())
                    .collect();
                let line = |cells: &[String]| {
                    let mut s = String::new();
                    for (c, w) in cells.iter().zip(&widths) {
                        let _ = write!(s, "{c:>w$}  ");
                    }
                    s.trim_end().to_string() + "\n"
                };
                let mut out = line(&self.columns);
                for r in &texts {
                    out += &line(r);
                }
                out
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One verification: what was expected, where the value comes from, what
/// was computed.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub source: String,
    pub computed: String,
    pub pass: bool,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Runs `f`, timing it, and records a check comparing display strings.
    pub fn check(&mut self, name: &str, source: &str, expected: impl ToString, f: impl FnOnce() -> anyhow::Result<String>) {
        let start = Instant::now();
        let expected = expected.to_string();
        let (computed, pass) = match f() {
            Ok(v) => {
                let pass = v == expected;
                (v, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        let millis = start.elapsed().as_millis();
        self.checks.push(Check { name: name.into(), expected, source: source.into(), computed, pass, millis });
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["check", "expected", "source", "computed", "pass", "ms"]);
        for c in &self.checks {
            t.push(vec![
                c.name.as_str().into(),
                c.expected.as_str().into(),
                c.source.as_str().into(),
                c.computed.as_str().into(),
                c.pass.into(),
                Cell::Int(BigInt::from(c.millis)),
            ]);
        }
        t
    }
}
