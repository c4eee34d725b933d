//! Spatial segregation of particles in a photograph, measured as a Gini index
//! over the edge length found in each cell of an equal-size grid.
//!
//! The pipeline runs in a fixed order:
//!
//! 1. [`image_io::load_image`] decodes a PNG/JPEG to 8-bit luminance.
//! 2. [`edge::detect_edges`] (or [`edge::import_edge_map`] for maps produced by
//!    an external detector) yields an edge-strength map.
//! 3. [`thin::binarize`] and [`thin::thin`] reduce it to unit-width skeletons.
//! 4. [`grid::split_and_measure`] counts skeleton pixels per grid cell.
//! 5. [`gini::gini_index`] turns the per-cell lengths into the index.
//!
//! [`pipeline::evaluate`] and [`pipeline::sweep`] compose those steps, and
//! [`synth`] generates particle images with a known layout for ground truth.

pub mod cli;
pub mod edge;
mod error;
pub mod gini;
pub mod grid;
pub mod image_io;
pub mod pipeline;
pub mod report;
pub mod synth;
pub mod thin;

pub use edge::{DetectorParams, EdgeMap};
pub use error::{Error, Result};
pub use gini::gini_index;
pub use grid::{CellLengths, GridSpec};
pub use image_io::GrayImage;
pub use pipeline::{evaluate, sweep, EdgeSource, Provenance, SegregationReport, SweepTable};
pub use synth::{Layout, SynthSpec};
pub use thin::BinaryEdgeMap;
