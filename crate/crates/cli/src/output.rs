use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
    #[default]
    Plain,
}

/// Rows of already-rendered cells. Cells never contain commas or pipes.
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", self.headers.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.headers.len()));
        for row in &self.rows {
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        out
    }

    /// One line per row, fields separated by single spaces, no header.
    pub fn plain(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// CSV, markdown or plain rendering. JSON is handled by the caller.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.csv(),
            OutputFormat::Markdown => self.markdown(),
            OutputFormat::Plain | OutputFormat::Json => self.plain(),
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

/// Rounds to three significant figures.
pub fn sig3(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(2 - magnitude);
    (x * scale).round() / scale
}

pub fn format_sig3(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let rounded = sig3(x);
    let decimals = (2 - rounded.abs().log10().floor() as i32).max(0) as usize;
    format!("{:.*}", decimals, rounded)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig3_rounding() {
        assert_eq!(format_sig3(1234.5), "1230");
        assert_eq!(format_sig3(0.012345), "0.0123");
        assert_eq!(format_sig3(1.0), "1.00");
        assert_eq!(format_sig3(99.96), "100");
        assert_eq!(sig3(0.00045678), 0.000457);
        assert_eq!(format_sig3(0.0), "0");
    }

    #[test]
    fn table_rendering() {
        let mut t = Table::new(vec!["n", "value"]);
        t.push(vec!["0".into(), "1".into()]);
        t.push(vec!["1".into(), "14".into()]);
        assert_eq!(t.csv(), "n,value\n0,1\n1,14\n");
        assert_eq!(
            t.markdown(),
            "| n | value |\n|---|---|\n| 0 | 1 |\n| 1 | 14 |\n"
        );
        assert_eq!(t.plain(), "0 1\n1 14\n");
    }
}
