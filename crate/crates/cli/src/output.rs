//! Result documents: every command produces a JSON value and a TSV table,
//! and the writer picks one. Output is byte-stable: serde_json maps are
//! sorted, TSV is LF-terminated, rationals render as "p/q".

use num::BigRational;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Tsv,
}

impl std::str::FromStr for OutputMode {
    type Err = String;

    fn from_str(s: &str) -> Result<OutputMode, String> {
        match s {
            "json" => Ok(OutputMode::Json),
            "tsv" => Ok(OutputMode::Tsv),
            other => Err(format!("unknown output mode {other:?} (expected json or tsv)")),
        }
    }
}

/// Header plus rows; the TSV rendering of a document.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: Vec<S>) -> Table {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: Into<String>>(&mut self, cells: Vec<S>) {
        let cells: Vec<String> = cells.into_iter().map(Into::into).collect();
        assert_eq!(cells.len(), self.header.len(), "ragged table row");
        self.rows.push(cells);
    }

    /// Two-column key/value table for scalar documents.
    pub fn keyed(pairs: Vec<(&str, String)>) -> Table {
        let mut t = Table::new(vec!["key", "value"]);
        for (k, v) in pairs {
            t.row(vec![k.to_string(), v]);
        }
        t
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// One command result, renderable either way.
pub struct Document {
    pub json: Value,
    pub table: Table,
}

impl Document {
    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Json => {
                let mut s = serde_json::to_string(&self.json).expect("serializable value");
                s.push('\n');
                s
            }
            OutputMode::Tsv => self.table.render(),
        }
    }
}

/// Rationals are always explicit "p/q", reduced, positive denominator.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio_value(r: &BigRational) -> Value {
    Value::String(ratio_string(r))
}
