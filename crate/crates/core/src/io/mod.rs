//! Edge-list ingestion and result serialization.

mod centrality_csv;
mod edge_list;

use serde::Serialize;

pub use centrality_csv::{
    centrality_records, format_decimal, read_centrality_csv, write_centrality_csv,
    CentralityRecord, CSV_HEADER,
};
pub use edge_list::{
    parse_edge_list, parse_edge_list_str, write_edge_list, Delimiter, IngestOptions, ParseReport,
};

/// Pretty-printed JSON with a trailing newline. Field order follows the
/// struct declaration, so output is stable for a given value.
pub fn write_report_json<T: Serialize>(report: &T) -> crate::Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}
