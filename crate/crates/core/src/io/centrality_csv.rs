use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::graph::{EdgeId, Graph};
use crate::walk::CentralityVector;

pub const CSV_HEADER: [&str; 4] = ["src", "dst", "count", "omega"];

/// One output row: an edge by its original labels and its final weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityRecord {
    pub src: String,
    pub dst: String,
    pub count: u64,
    pub omega: f64,
}

/// Rounds to 12 significant digits and prints the shortest decimal that
/// reads back to the rounded value (so 6 prints as `6.0`).
pub fn format_decimal(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}")
        .parse()
        .expect("scientific format parses");
    format!("{rounded:?}")
}

/// Rows sorted by descending ω, ties broken by ascending EdgeId.
pub fn centrality_records(vec: &CentralityVector, g: &Graph) -> Result<Vec<CentralityRecord>> {
    if vec.edge_count != g.edge_count() || vec.fingerprint != g.fingerprint() {
        return Err(KpathError::MismatchedEdgeSets(
            "centrality vector was computed on another graph".into(),
        ));
    }
    let mut order: Vec<EdgeId> = g.edges().collect();
    // ω is increasing in the count for any positive bonus.
    order.sort_by(|a, b| {
        vec.counts[b.index()]
            .cmp(&vec.counts[a.index()])
            .then(a.cmp(b))
    });
    Ok(order
        .into_iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            CentralityRecord {
                src: g.label(u).to_owned(),
                dst: g.label(v).to_owned(),
                count: vec.counts[e.index()],
                omega: vec.omega(e),
            }
        })
        .collect())
}

pub fn write_centrality_csv(vec: &CentralityVector, g: &Graph) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in centrality_records(vec, g)? {
        w.write_record([r.src, r.dst, r.count.to_string(), format_decimal(r.omega)])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn read_centrality_csv<R: Read>(reader: R) -> Result<Vec<CentralityRecord>> {
    let mut rdr = csv::Reader::from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(KpathError::Parse {
            line: 1,
            message: format!("expected header {}", CSV_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize().enumerate() {
        out.push(row.map_err(|e: csv::Error| KpathError::Parse {
            line: i + 2,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}
