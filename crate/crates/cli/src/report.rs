//! Deterministic text, TSV and JSON rendering of command results.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

pub enum Block {
    Line(String),
    Table(Vec<Vec<String>>),
}

/// Output of one command: human-readable blocks, a JSON value, and whether
/// every check it ran passed.
pub struct Report {
    pub blocks: Vec<Block>,
    pub json: Value,
    pub pass: bool,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report {
            blocks: Vec::new(),
            json,
            pass: true,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.blocks.push(Block::Line(s.into()));
        self
    }

    pub fn table(&mut self, rows: Vec<Vec<String>>) -> &mut Self {
        self.blocks.push(Block::Table(rows));
        self
    }

    pub fn check(&mut self, ok: bool) -> &'static str {
        self.pass &= ok;
        if ok {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Text | Format::Tsv => {
                let mut out = String::new();
                for b in &self.blocks {
                    match b {
                        Block::Line(l) => {
                            out.push_str(l);
                            out.push('\n');
                        }
                        Block::Table(rows) if format == Format::Tsv => {
                            for r in rows {
                                out.push_str(&r.join("\t"));
                                out.push('\n');
                            }
                        }
                        Block::Table(rows) => out.push_str(&aligned(rows)),
                    }
                }
                out
            }
        }
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c + 1 == r.len() {
                    s.clone()
                } else {
                    format!("{s:<w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
