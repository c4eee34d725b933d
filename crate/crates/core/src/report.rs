//! JSON and CSV renderings of reports and sweep tables.

use serde::{Deserialize, Serialize};

use crate::{CellLengths, Error, GridSpec, Provenance, Result, SegregationReport, SweepTable};

/// Four decimals, ties to even.
pub fn format4(value: f64) -> String {
    // std float formatting rounds the exact binary value, ties to even
    format!("{value:.4}")
}

pub fn format_index(index: Option<f64>) -> String {
    index.map_or_else(|| "NA".to_string(), format4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NoEdges,
}

/// Serialized form of an analysis, covering the no-edges outcome too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub grid: GridSpec,
    pub index: Option<f64>,
    pub status: Status,
    pub total_edge_pixels: u64,
    pub cells: Vec<u64>,
    pub source: Provenance,
}

impl ReportDocument {
    /// Document for an image whose thinned edge map is empty.
    pub fn no_edges(grid: GridSpec, source: Provenance) -> Self {
        Self {
            grid,
            index: None,
            status: Status::NoEdges,
            total_edge_pixels: 0,
            cells: vec![0; grid.cell_count()],
            source,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidParams(format!("malformed report: {e}")))
    }

    /// Header plus a single data row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record([
            "rows",
            "cols",
            "index",
            "total_edge_pixels",
            "status",
            "input",
        ])
        .and_then(|_| {
            w.write_record([
                self.grid.rows.to_string(),
                self.grid.cols.to_string(),
                format_index(self.index),
                self.total_edge_pixels.to_string(),
                status_token(self.status).to_string(),
                self.source.input.clone().unwrap_or_default(),
            ])
        })
        .expect("in-memory csv write");
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }
}

fn status_token(status: Status) -> &'static str {
    match status {
        Status::Ok => "ok",
        Status::NoEdges => "no_edges",
    }
}

impl From<&SegregationReport> for ReportDocument {
    fn from(r: &SegregationReport) -> Self {
        Self {
            grid: r.grid,
            index: Some(r.index),
            status: Status::Ok,
            total_edge_pixels: r.total_edge_pixels,
            cells: r.cell_lengths.y.clone(),
            source: r.source.clone(),
        }
    }
}

impl TryFrom<ReportDocument> for SegregationReport {
    type Error = Error;

    fn try_from(doc: ReportDocument) -> Result<Self> {
        let index = match (doc.status, doc.index) {
            (Status::Ok, Some(i)) => i,
            (Status::NoEdges, _) => return Err(Error::NoEdges),
            (Status::Ok, None) => {
                return Err(Error::InvalidParams(
                    "report has status ok but no index".into(),
                ))
            }
        };
        if doc.cells.len() != doc.grid.cell_count() {
            return Err(Error::BufferSize {
                expected: doc.grid.cell_count(),
                actual: doc.cells.len(),
            });
        }
        Ok(SegregationReport {
            grid: doc.grid,
            index,
            cell_lengths: CellLengths {
                rows: doc.grid.rows,
                cols: doc.grid.cols,
                y: doc.cells,
            },
            total_edge_pixels: doc.total_edge_pixels,
            source: doc.source,
        })
    }
}

impl SegregationReport {
    pub fn to_json(&self) -> String {
        ReportDocument::from(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        ReportDocument::from_json(text)?.try_into()
    }
}

/// Sweep as CSV: a header of column counts, a leading column of row counts,
/// entries at four decimals and `NA` where no edges were found.
pub fn sweep_to_csv(table: &SweepTable) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    let header = std::iter::once("rows\\cols".to_string())
        .chain((1..=table.max_cols).map(|c| c.to_string()));
    w.write_record(header).expect("in-memory csv write");
    for r in 1..=table.max_rows {
        let row = std::iter::once(r.to_string())
            .chain((1..=table.max_cols).map(|c| format_index(table.get(r, c))));
        w.write_record(row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

/// Parses the output of [`sweep_to_csv`] back into a table.
pub fn sweep_from_csv(text: &str) -> Result<SweepTable> {
    let malformed = |msg: String| Error::InvalidParams(format!("malformed sweep csv: {msg}"));
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let max_cols = reader
        .headers()
        .map_err(|e| malformed(e.to_string()))?
        .len()
        .saturating_sub(1);
    let mut values = vec![];
    let mut max_rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| malformed(e.to_string()))?;
        max_rows += 1;
        for field in record.iter().skip(1) {
            values.push(match field {
                "NA" => None,
                v => Some(
                    v.parse::<f64>()
                        .map_err(|e| malformed(format!("{v:?}: {e}")))?,
                ),
            });
        }
    }
    SweepTable::new(max_rows, max_cols, values)
}
