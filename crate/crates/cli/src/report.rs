use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Past this many covectors a listing is streamed as JSON lines.
pub const STREAM_THRESHOLD: usize = 10_000;

#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    /// Path, or the shortcut that named the input.
    pub source: String,
    /// SHA-256 of the file bytes, or of the canonical JSON for shortcuts.
    pub sha256: String,
}

impl InputRecord {
    pub fn new(source: impl Into<String>, bytes: &[u8]) -> Self {
        InputRecord {
            source: source.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub field: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputRecord>,
    pub config: RunConfig,
    pub results: Value,
    pub assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

/// An aligned text table.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(title: impl Into<String>, headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            title: title.into(),
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, out: &mut impl Write) -> io::Result<()> {
        let cols = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (k, c) in r.iter().enumerate().take(cols) {
                width[k] = width[k].max(c.chars().count());
            }
        }
        if !self.title.is_empty() {
            writeln!(out, "{}", self.title)?;
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{c:<w$}", w = width[k]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(&self.headers))?;
        writeln!(out, "{}", width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "))?;
        for r in &self.rows {
            writeln!(out, "{}", line(r))?;
        }
        writeln!(out)
    }
}

/// What a subcommand hands back for printing.
pub struct Outcome {
    pub results: Value,
    pub assertions: Vec<Assertion>,
    pub tables: Vec<Table>,
    /// Long covector listings, printed after the report.
    pub stream: Option<Vec<String>>,
}

impl Outcome {
    pub fn new(results: Value) -> Self {
        Outcome {
            results,
            assertions: Vec::new(),
            tables: Vec::new(),
            stream: None,
        }
    }

    pub fn assert(&mut self, name: impl Into<String>, passed: bool) {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
        });
    }

    pub fn table(mut self, t: Table) -> Self {
        self.tables.push(t);
        self
    }
}

pub fn write_json(report: &RunReport, stream: Option<&[String]>, out: &mut impl Write) -> io::Result<()> {
    match stream {
        None => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Some(lines) => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)?;
            for l in lines {
                serde_json::to_writer(&mut *out, &serde_json::json!({ "covector": l }))?;
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

pub fn write_tables(report: &RunReport, tables: &[Table], out: &mut impl Write) -> io::Result<()> {
    for t in tables {
        t.render(out)?;
    }
    if !report.assertions.is_empty() {
        let mut t = Table::new("assertions", ["assertion", "result"]);
        for a in &report.assertions {
            t.row([a.name.as_str(), if a.passed { "PASS" } else { "FAIL" }]);
        }
        t.render(out)?;
    }
    if let Some(ms) = report.elapsed_ms {
        writeln!(out, "elapsed: {ms:.1} ms")?;
    }
    Ok(())
}
