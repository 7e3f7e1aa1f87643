//! Report assembly and rendering. Every command produces a [`Report`];
//! rendering is deterministic so identical invocations emit byte-identical
//! output: fixed 15-significant-digit formatting in text and CSV, sorted
//! keys and shortest round-trip numbers in JSON.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Bool(bool),
    Empty,
}

/// Fixed 15-significant-digit rendering for text and CSV outputs.
pub fn fmt15(x: f64) -> String {
    format!("{x:.14e}")
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt15(*v),
            Cell::Text(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Num(v) => json!(v),
            Cell::Text(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            params: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            max_abs_err: 0.0,
            max_rel_err: 0.0,
            passed: true,
        }
    }

    pub fn param(&mut self, key: &'static str, value: impl ToString) {
        self.params.push((key, value.to_string()));
    }

    /// Fold one comparison into the report maxima. The scaled error is
    /// absolute below magnitude one and relative above it.
    pub fn record_error(&mut self, abs_err: f64, reference: f64, tolerance: f64) {
        let scaled = abs_err / 1.0f64.max(reference.abs());
        self.max_abs_err = self.max_abs_err.max(abs_err);
        self.max_rel_err = self.max_rel_err.max(scaled);
        if scaled.is_nan() || scaled > tolerance {
            self.passed = false;
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (key, value) in &self.params {
            out.push_str(&format!("{key}: {value}\n"));
        }
        if !self.rows.is_empty() {
            out.push('\n');
            let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
            let rendered: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(i, cell)| {
                            let s = cell.text();
                            widths[i] = widths[i].max(s.len());
                            s
                        })
                        .collect()
                })
                .collect();
            let header: Vec<String> = self
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{c:>width$}", width = widths[i]))
                .collect();
            out.push_str(&header.join("  "));
            out.push('\n');
            for row in rendered {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(i, s)| format!("{s:>width$}", width = widths[i]))
                    .collect();
                out.push_str(&line.join("  "));
                out.push('\n');
            }
        }
        out.push_str(&format!(
            "\nmax_abs_err={}  max_rel_err={}  passed={}\n",
            fmt15(self.max_abs_err),
            fmt15(self.max_rel_err),
            self.passed
        ));
        out
    }

    fn render_csv(&self) -> String {
        fn quote(field: String) -> String {
            if field.contains([',', '"', '\n']) {
                format!("\"{}\"", field.replace('"', "\"\""))
            } else {
                field
            }
        }
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| quote(c.text())).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut params = Map::new();
        for (key, value) in &self.params {
            params.insert((*key).to_string(), json!(value));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut object = Map::new();
                for (column, cell) in self.columns.iter().zip(row) {
                    object.insert((*column).to_string(), cell.json());
                }
                Value::Object(object)
            })
            .collect();
        let report = json!({
            "command": self.command,
            "params": Value::Object(params),
            "rows": rows,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "passed": self.passed,
        });
        let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(fmt15(0.5), "5.00000000000000e-1");
        assert_eq!(fmt15(-2.0), "-2.00000000000000e0");
    }

    #[test]
    fn renders_are_deterministic() {
        let mut report = Report::new("sum");
        report.param("n", "0..2");
        report.columns = vec!["n", "value"];
        report.rows.push(vec![Cell::Int(0), Cell::Num(0.1)]);
        report.rows.push(vec![Cell::Int(1), Cell::Empty]);
        for format in [Format::Text, Format::Csv, Format::Json] {
            assert_eq!(report.render(format), report.render(format));
        }
        assert!(report.render(Format::Csv).starts_with("n,value\n"));
        let parsed: serde_json::Value = serde_json::from_str(&report.render(Format::Json)).unwrap();
        assert_eq!(parsed["command"], "sum");
        assert_eq!(parsed["rows"][1]["value"], serde_json::Value::Null);
    }
}
