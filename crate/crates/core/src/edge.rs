//! Edge-strength maps: a Canny-style gradient detector, plus import/export of
//! maps produced by external detectors as 8-bit PNGs.

use std::collections::VecDeque;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::image_io::{decode, save_gray_png};
use crate::{Error, GrayImage, Result};

/// Row-major edge strengths in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeMap {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl EdgeMap {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if data.len() != width * height {
            return Err(Error::BufferSize {
                expected: width * height,
                actual: data.len(),
            });
        }
        if let Some(v) = data.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidParams(format!(
                "edge strength {v} outside [0, 1]"
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    /// Quantizes to 8 bits, `round(255 * strength)`.
    pub fn to_gray8(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|v| (v * 255.0).round() as u8)
            .collect()
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        save_gray_png(path.as_ref(), self.width, self.height, &self.to_gray8())
    }
}

/// Parameters of the built-in detector. Thresholds are fractions of the
/// largest gradient magnitude in the image.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectorParams {
    pub sigma: f64,
    pub low: f64,
    pub high: f64,
}

impl Default for DetectorParams {
    fn default() -> Self {
        Self {
            sigma: 1.4,
            low: 0.1,
            high: 0.3,
        }
    }
}

impl DetectorParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "sigma must be > 0, got {}",
                self.sigma
            )));
        }
        if !(0.0 < self.low && self.low < self.high && self.high < 1.0) {
            return Err(Error::InvalidParams(format!(
                "thresholds must satisfy 0 < low < high < 1, got low={} high={}",
                self.low, self.high
            )));
        }
        Ok(())
    }
}

/// Fixed-point scale of the Gaussian taps. Smoothing and Sobel run in exact
/// integer arithmetic, so adding a constant to every pixel shifts the smoothed
/// image by an exact constant and leaves the gradients bit-identical.
const KERNEL_SCALE: f64 = 1024.0;

/// Canny-style detection: Gaussian smoothing, Sobel gradient, non-maximum
/// suppression and 8-connected double-threshold hysteresis. Output strengths
/// are exactly 0.0 or 1.0.
pub fn detect_edges(img: &GrayImage, params: &DetectorParams) -> Result<EdgeMap> {
    params.validate()?;
    let (w, h) = (img.width(), img.height());
    let smoothed = gaussian_smooth(img, params.sigma);
    let (gx, gy) = sobel(&smoothed, w, h);
    let magnitude: Vec<f64> = gx
        .iter()
        .zip(&gy)
        .map(|(&x, &y)| (x as f64).hypot(y as f64))
        .collect();
    let max = magnitude.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return EdgeMap::new(w, h, vec![0.0; w * h]);
    }
    let suppressed = non_maximum_suppression(&magnitude, &gx, &gy, w, h);
    let edges = hysteresis(&suppressed, w, h, params.low * max, params.high * max);
    EdgeMap::new(
        w,
        h,
        edges
            .into_iter()
            .map(|e| if e { 1.0 } else { 0.0 })
            .collect(),
    )
}

fn gaussian_taps(sigma: f64) -> Vec<i64> {
    let radius = (3.0 * sigma).ceil().max(1.0) as i64;
    (-radius..=radius)
        .map(|i| {
            let x = i as f64;
            (KERNEL_SCALE * (-x * x / (2.0 * sigma * sigma)).exp()).round() as i64
        })
        .collect()
}

/// Separable smoothing with edge-replicated borders. The result is scaled by
/// the square of the tap sum; only relative values matter downstream.
fn gaussian_smooth(img: &GrayImage, sigma: f64) -> Vec<i64> {
    let (w, h) = (img.width(), img.height());
    let taps = gaussian_taps(sigma);
    let radius = (taps.len() / 2) as isize;
    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;

    let mut horizontal = vec![0i64; w * h];
    for y in 0..h {
        let row = &img.data()[y * w..(y + 1) * w];
        for x in 0..w {
            horizontal[y * w + x] = taps
                .iter()
                .enumerate()
                .map(|(k, &t)| t * i64::from(row[clamp(x as isize + k as isize - radius, w)]))
                .sum();
        }
    }

    let mut out = vec![0i64; w * h];
    for y in 0..h {
        for x in 0..w {
            out[y * w + x] = taps
                .iter()
                .enumerate()
                .map(|(k, &t)| t * horizontal[clamp(y as isize + k as isize - radius, h) * w + x])
                .sum();
        }
    }
    out
}

/// Sobel derivatives with edge-replicated borders; `gy` grows downward.
fn sobel(s: &[i64], w: usize, h: usize) -> (Vec<i64>, Vec<i64>) {
    let at = |x: isize, y: isize| {
        let x = x.clamp(0, w as isize - 1) as usize;
        let y = y.clamp(0, h as isize - 1) as usize;
        s[y * w + x]
    };
    let mut gx = vec![0i64; w * h];
    let mut gy = vec![0i64; w * h];
    for y in 0..h as isize {
        for x in 0..w as isize {
            let i = y as usize * w + x as usize;
            gx[i] = (at(x + 1, y - 1) + 2 * at(x + 1, y) + at(x + 1, y + 1))
                - (at(x - 1, y - 1) + 2 * at(x - 1, y) + at(x - 1, y + 1));
            gy[i] = (at(x - 1, y + 1) + 2 * at(x, y + 1) + at(x + 1, y + 1))
                - (at(x - 1, y - 1) + 2 * at(x, y - 1) + at(x + 1, y - 1));
        }
    }
    (gx, gy)
}

/// Keeps pixels that are maxima along the quantized gradient direction.
/// Plateaus of equal magnitude keep only the pixel on the negative side
/// (`>` behind, `>=` ahead), so a symmetric step yields a one-pixel line.
fn non_maximum_suppression(mag: &[f64], gx: &[i64], gy: &[i64], w: usize, h: usize) -> Vec<f64> {
    let tan_22_5 = std::f64::consts::FRAC_PI_8.tan();
    let tan_67_5 = (3.0 * std::f64::consts::FRAC_PI_8).tan();
    let at = |x: isize, y: isize| {
        if x < 0 || y < 0 || x >= w as isize || y >= h as isize {
            0.0
        } else {
            mag[y as usize * w + x as usize]
        }
    };

    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            let i = y * w + x;
            let m = mag[i];
            if m == 0.0 {
                continue;
            }
            let (ax, ay) = ((gx[i] as f64).abs(), (gy[i] as f64).abs());
            let (dx, dy): (isize, isize) = if ay <= ax * tan_22_5 {
                (1, 0)
            } else if ay >= ax * tan_67_5 {
                (0, 1)
            } else if (gx[i] > 0) == (gy[i] > 0) {
                (1, 1)
            } else {
                (1, -1)
            };
            let (xi, yi) = (x as isize, y as isize);
            let behind = at(xi - dx, yi - dy);
            let ahead = at(xi + dx, yi + dy);
            if m > behind && m >= ahead {
                out[i] = m;
            }
        }
    }
    out
}

fn hysteresis(mag: &[f64], w: usize, h: usize, low: f64, high: f64) -> Vec<bool> {
    let mut edge = vec![false; w * h];
    let mut queue = VecDeque::new();
    for (i, &m) in mag.iter().enumerate() {
        if m > 0.0 && m >= high {
            edge[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        let (x, y) = ((i % w) as isize, (i / w) as isize);
        for dy in -1..=1isize {
            for dx in -1..=1isize {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                    continue;
                }
                let j = ny as usize * w + nx as usize;
                if !edge[j] && mag[j] > 0.0 && mag[j] >= low {
                    edge[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    edge
}

/// Reads a single-channel PNG written by an external detector; each 8-bit
/// value `v` becomes strength `v / 255`.
pub fn import_edge_map(
    path: impl AsRef<Path>,
    expected_width: usize,
    expected_height: usize,
) -> Result<EdgeMap> {
    let path = path.as_ref();
    let decoded = decode(path)?.to_luma8();
    let actual = (decoded.width() as usize, decoded.height() as usize);
    if actual != (expected_width, expected_height) {
        return Err(Error::DimensionMismatch {
            expected: (expected_width, expected_height),
            actual,
        });
    }
    let data = decoded
        .into_raw()
        .into_iter()
        .map(|v| f64::from(v) / 255.0)
        .collect();
    EdgeMap::new(actual.0, actual.1, data)
}
