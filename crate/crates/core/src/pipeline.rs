//! The end-to-end evaluation: detect, binarize, thin, partition, index.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::edge::detect_edges;
use crate::gini::gini_index;
use crate::grid::{crop_to_grid, split_and_measure};
use crate::thin::{binarize, thin};
use crate::{
    BinaryEdgeMap, CellLengths, DetectorParams, EdgeMap, Error, GrayImage, GridSpec, Result,
};

/// Where the edge-strength map comes from.
#[derive(Clone, Debug)]
pub enum EdgeSource {
    Detector(DetectorParams),
    /// A map produced elsewhere, e.g. by a learned detector.
    Imported {
        map: EdgeMap,
        path: Option<PathBuf>,
    },
}

impl Default for EdgeSource {
    fn default() -> Self {
        EdgeSource::Detector(DetectorParams::default())
    }
}

/// How a report was produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub input: Option<String>,
    pub detector: Option<DetectorParams>,
    pub edge_map: Option<String>,
    pub threshold: f64,
}

impl Provenance {
    pub fn new(source: &EdgeSource, threshold: f64) -> Self {
        let (detector, edge_map) = match source {
            EdgeSource::Detector(p) => (Some(*p), None),
            EdgeSource::Imported { path, .. } => {
                (None, path.as_ref().map(|p| p.display().to_string()))
            }
        };
        Self {
            input: None,
            detector,
            edge_map,
            threshold,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SegregationReport {
    pub grid: GridSpec,
    /// In `[0, 1]`.
    pub index: f64,
    pub cell_lengths: CellLengths,
    pub total_edge_pixels: u64,
    pub source: Provenance,
}

/// Runs edge extraction, binarization and thinning.
pub fn thinned_edges(
    img: &GrayImage,
    source: &EdgeSource,
    threshold: f64,
) -> Result<BinaryEdgeMap> {
    let detected;
    let edges = match source {
        EdgeSource::Detector(params) => {
            detected = detect_edges(img, params)?;
            &detected
        }
        EdgeSource::Imported { map, .. } => {
            if (map.width(), map.height()) != (img.width(), img.height()) {
                return Err(Error::DimensionMismatch {
                    expected: (img.width(), img.height()),
                    actual: (map.width(), map.height()),
                });
            }
            map
        }
    };
    Ok(thin(&binarize(edges, threshold)?))
}

/// Index for one grid over an already thinned map.
pub fn measure(thinned: &BinaryEdgeMap, grid: GridSpec) -> Result<(f64, CellLengths)> {
    let cells = split_and_measure(thinned, grid)?;
    let index = gini_index(&cells.y)?;
    Ok((index, cells))
}

/// Computes the segregation index of `img` on `grid`.
pub fn evaluate(
    img: &GrayImage,
    grid: GridSpec,
    source: &EdgeSource,
    threshold: f64,
) -> Result<SegregationReport> {
    grid.validate()?;
    crop_to_grid(img.width(), img.height(), grid)?;
    let thinned = thinned_edges(img, source, threshold)?;
    let (index, cell_lengths) = measure(&thinned, grid)?;
    Ok(SegregationReport {
        grid,
        index,
        total_edge_pixels: cell_lengths.total(),
        cell_lengths,
        source: Provenance::new(source, threshold),
    })
}

/// Index for every grid from 1x1 to `max_rows x max_cols`. `None` marks grids
/// where the cropped region holds no edge pixel.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub max_rows: usize,
    pub max_cols: usize,
    values: Vec<Option<f64>>,
}

impl SweepTable {
    pub fn new(max_rows: usize, max_cols: usize, values: Vec<Option<f64>>) -> Result<Self> {
        if values.len() != max_rows * max_cols {
            return Err(Error::BufferSize {
                expected: max_rows * max_cols,
                actual: values.len(),
            });
        }
        Ok(Self {
            max_rows,
            max_cols,
            values,
        })
    }

    /// Entry for a `rows x cols` grid, both 1-based.
    pub fn get(&self, rows: usize, cols: usize) -> Option<f64> {
        assert!((1..=self.max_rows).contains(&rows) && (1..=self.max_cols).contains(&cols));
        self.values[(rows - 1) * self.max_cols + cols - 1]
    }

    pub fn values(&self) -> &[Option<f64>] {
        &self.values
    }
}

/// Runs edge extraction once and indexes every grid up to the given size.
pub fn sweep(
    img: &GrayImage,
    max_rows: usize,
    max_cols: usize,
    source: &EdgeSource,
    threshold: f64,
) -> Result<SweepTable> {
    let finest = GridSpec::new(max_rows, max_cols)?;
    crop_to_grid(img.width(), img.height(), finest)?;
    let thinned = thinned_edges(img, source, threshold)?;
    let values = (0..max_rows * max_cols)
        .into_par_iter()
        .map(|k| {
            let grid = GridSpec {
                rows: k / max_cols + 1,
                cols: k % max_cols + 1,
            };
            match measure(&thinned, grid) {
                Ok((index, _)) => Ok(Some(index)),
                Err(Error::NoEdges) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SweepTable::new(max_rows, max_cols, values)
}
