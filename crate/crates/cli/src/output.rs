// SPDX-License-Identifier: Apache-2.0

use std::fmt::{Display, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key: value` lines, or an aligned table.
    Text,
    /// Tab-separated values.
    Tsv,
}

/// Ordered key/value summary.
#[derive(Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.rows.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.rows {
            let _ = match format {
                Format::Text => writeln!(out, "{k}: {v}"),
                Format::Tsv => writeln!(out, "{k}\t{v}"),
            };
        }
        out
    }
}

/// Render rows under a header, space-aligned for text.
pub fn render_table(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            let _ = writeln!(out, "{}", header.join("\t"));
            for row in rows {
                let _ = writeln!(out, "{}", row.join("\t"));
            }
        }
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", line(header.to_vec()));
            for row in rows {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
    }
    out
}
