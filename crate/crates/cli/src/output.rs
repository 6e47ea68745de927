use std::io::{self, Write};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Table,
    Json,
    Tsv,
}

/// One TSV line: case, n, q, entry-label, mult/dim, side.
pub struct Row {
    pub case: String,
    pub n: String,
    pub q: String,
    pub label: String,
    pub value: String,
    pub side: &'static str,
}

/// Everything a subcommand prints, in the three encodings.
pub struct Report<T: Serialize> {
    pub json: T,
    pub rows: Vec<Row>,
    pub table: Vec<String>,
}

impl<T: Serialize> Report<T> {
    pub fn emit(&self, mode: Mode) -> anyhow::Result<()> {
        let mut out = io::stdout().lock();
        match mode {
            Mode::Json => writeln!(out, "{}", serde_json::to_string(&self.json)?)?,
            Mode::Tsv => {
                writeln!(out, "case\tn\tq\tentry-label\tmult/dim\tside")?;
                for r in &self.rows {
                    writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}", r.case, r.n, r.q, r.label, r.value, r.side)?;
                }
            }
            Mode::Table => {
                for line in &self.table {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Ok(())
    }
}
