//! Equal-size grid partition and per-cell edge length.

use serde::{Deserialize, Serialize};

use crate::{BinaryEdgeMap, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        let g = Self { rows, cols };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidParams(format!(
                "grid must have at least one row and column, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn cell_count(&self) -> usize {
        self.rows * self.cols
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { rows: 7, cols: 7 }
    }
}

/// Edge-pixel count per cell, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellLengths {
    pub rows: usize,
    pub cols: usize,
    pub y: Vec<u64>,
}

impl CellLengths {
    pub fn total(&self) -> u64 {
        self.y.iter().sum()
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.y[row * self.cols + col]
    }
}

/// Largest top-left-anchored region whose sides divide evenly by the grid.
pub fn crop_to_grid(width: usize, height: usize, g: GridSpec) -> Result<(usize, usize)> {
    g.validate()?;
    if width < g.cols || height < g.rows {
        return Err(Error::GridTooFine {
            rows: g.rows,
            cols: g.cols,
            width,
            height,
        });
    }
    Ok((g.cols * (width / g.cols), g.rows * (height / g.rows)))
}

/// Counts foreground pixels per cell of the cropped region.
pub fn split_and_measure(b: &BinaryEdgeMap, g: GridSpec) -> Result<CellLengths> {
    let (cw, ch) = crop_to_grid(b.width(), b.height(), g)?;
    let (cell_w, cell_h) = (cw / g.cols, ch / g.rows);
    let mut y = vec![0u64; g.cell_count()];
    for py in 0..ch {
        let row = py / cell_h;
        for px in 0..cw {
            if b.get(px, py) {
                y[row * g.cols + px / cell_w] += 1;
            }
        }
    }
    Ok(CellLengths {
        rows: g.rows,
        cols: g.cols,
        y,
    })
}
