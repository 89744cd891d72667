use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::graph::{CleaningStats, Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delimiter {
    /// Any run of ASCII whitespace.
    Whitespace,
    Char(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IngestOptions {
    pub comment_prefix: char,
    pub delimiter: Delimiter,
    /// Collapse `(v, u)` into an earlier `(u, v)`. When off, such a
    /// reciprocal pair is rejected as a parse error instead.
    pub as_undirected: bool,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            comment_prefix: '#',
            delimiter: Delimiter::Whitespace,
            as_undirected: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseReport {
    pub lines_read: u64,
    pub comment_or_blank_lines: u64,
    pub self_loops_dropped: u64,
    pub duplicates_collapsed: u64,
    pub reciprocal_collapsed: u64,
}

impl ParseReport {
    fn absorb(&mut self, stats: CleaningStats) {
        self.self_loops_dropped = stats.self_loops_dropped;
        self.duplicates_collapsed = stats.duplicates_collapsed;
        self.reciprocal_collapsed = stats.reciprocal_collapsed;
    }
}

fn split_tokens(line: &str, delimiter: Delimiter) -> Vec<&str> {
    match delimiter {
        Delimiter::Whitespace => line.split_ascii_whitespace().collect(),
        Delimiter::Char(c) => line
            .split(c)
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect(),
    }
}

/// Reads an edge list: one `u v` pair per line, comment lines and blank
/// lines skipped.
pub fn parse_edge_list<R: BufRead>(
    mut reader: R,
    opts: &IngestOptions,
) -> Result<(Graph, ParseReport)> {
    let mut builder = GraphBuilder::new();
    let mut report = ParseReport::default();
    let mut buf = Vec::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        report.lines_read += 1;
        let line = std::str::from_utf8(&buf).map_err(|_| KpathError::Parse {
            line: line_no,
            message: "invalid UTF-8".into(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with(opts.comment_prefix) {
            report.comment_or_blank_lines += 1;
            continue;
        }
        let tokens = split_tokens(trimmed, opts.delimiter);
        let [a, b] = tokens[..] else {
            return Err(KpathError::Parse {
                line: line_no,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        };
        let before = builder.stats().reciprocal_collapsed;
        builder.add_edge(a, b);
        if !opts.as_undirected && builder.stats().reciprocal_collapsed > before {
            return Err(KpathError::Parse {
                line: line_no,
                message: format!("reciprocal pair {a} {b} in input declared undirected-only"),
            });
        }
    }
    report.absorb(builder.stats());
    Ok((builder.build()?, report))
}

pub fn parse_edge_list_str(text: &str, opts: &IngestOptions) -> Result<(Graph, ParseReport)> {
    parse_edge_list(text.as_bytes(), opts)
}

/// The cleaned edge list, one `u v` pair per line in EdgeId order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (a, b) in g.label_pairs() {
        out.push_str(a);
        out.push(' ');
        out.push_str(b);
        out.push('\n');
    }
    out
}
