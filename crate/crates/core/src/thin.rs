//! Binarization of edge maps and Zhang-Suen thinning to unit-width skeletons.

use std::path::Path;
use std::sync::OnceLock;

use crate::image_io::save_gray_png;
use crate::{EdgeMap, Error, Result};

/// Row-major binary map; `true` marks an edge (foreground) pixel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryEdgeMap {
    width: usize,
    height: usize,
    data: Vec<bool>,
}

impl BinaryEdgeMap {
    pub fn new(width: usize, height: usize, data: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if data.len() != width * height {
            return Err(Error::BufferSize {
                expected: width * height,
                actual: data.len(),
            });
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[bool] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.data[y * self.width + x]
    }

    /// Out-of-bounds coordinates read as background.
    fn get_signed(&self, x: isize, y: isize) -> bool {
        x >= 0
            && y >= 0
            && (x as usize) < self.width
            && (y as usize) < self.height
            && self.get(x as usize, y as usize)
    }

    pub fn foreground_count(&self) -> usize {
        self.data.iter().filter(|&&v| v).count()
    }

    /// Edge pixels as 255 on a 0 background.
    pub fn to_gray8(&self) -> Vec<u8> {
        self.data.iter().map(|&v| if v { 255 } else { 0 }).collect()
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        save_gray_png(path.as_ref(), self.width, self.height, &self.to_gray8())
    }

    /// Neighbor bitmask, bit k set when ring position `RING[k]` is foreground.
    fn ring_mask(&self, x: usize, y: usize) -> u8 {
        RING.iter().enumerate().fold(0u8, |mask, (k, &(dx, dy))| {
            if self.get_signed(x as isize + dx, y as isize + dy) {
                mask | (1 << k)
            } else {
                mask
            }
        })
    }
}

/// Pixel is 1 iff `strength >= threshold`.
pub fn binarize(e: &EdgeMap, threshold: f64) -> Result<BinaryEdgeMap> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidParams(format!(
            "binarize threshold must be in (0, 1), got {threshold}"
        )));
    }
    BinaryEdgeMap::new(
        e.width(),
        e.height(),
        e.data().iter().map(|&v| v >= threshold).collect(),
    )
}

/// Neighbors in Zhang-Suen order P2..P9: N, NE, E, SE, S, SW, W, NW.
const RING: [(isize, isize); 8] = [
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
];
const N: u8 = 1 << 0;
const E: u8 = 1 << 2;
const S: u8 = 1 << 4;
const W: u8 = 1 << 6;

/// Zhang-Suen thinning, iterated until a full pass deletes nothing.
///
/// Each sub-iteration marks candidates with the classic parallel test, then
/// deletes them in raster order only while they are still simple points with
/// at least two neighbors. Plain Zhang-Suen erases 2x2 blocks and two-pixel
/// diagonal strokes outright; the re-check keeps every 8-connected component
/// (and every hole) intact.
pub fn thin(b: &BinaryEdgeMap) -> BinaryEdgeMap {
    let mut map = b.clone();
    loop {
        let first = sub_iteration(
            &mut map,
            |m| m & N == 0 || m & E == 0 || m & S == 0,
            |m| m & E == 0 || m & S == 0 || m & W == 0,
        );
        let second = sub_iteration(
            &mut map,
            |m| m & N == 0 || m & E == 0 || m & W == 0,
            |m| m & N == 0 || m & S == 0 || m & W == 0,
        );
        if !first && !second {
            return map;
        }
    }
}

fn sub_iteration(
    map: &mut BinaryEdgeMap,
    cond_a: impl Fn(u8) -> bool,
    cond_b: impl Fn(u8) -> bool,
) -> bool {
    let mut candidates = Vec::new();
    for y in 0..map.height {
        for x in 0..map.width {
            if !map.get(x, y) {
                continue;
            }
            let mask = map.ring_mask(x, y);
            let neighbors = mask.count_ones();
            if (2..=6).contains(&neighbors)
                && transitions(mask) == 1
                && cond_a(mask)
                && cond_b(mask)
            {
                candidates.push((x, y));
            }
        }
    }

    let simple = simple_table();
    let mut changed = false;
    for (x, y) in candidates {
        let mask = map.ring_mask(x, y);
        if mask.count_ones() >= 2 && simple[mask as usize] {
            map.data[y * map.width + x] = false;
            changed = true;
        }
    }
    changed
}

/// Number of background-to-foreground transitions walking P2..P9..P2.
fn transitions(mask: u8) -> u32 {
    (0..8)
        .filter(|&k| mask & (1 << k) == 0 && mask & (1 << ((k + 1) % 8)) != 0)
        .count() as u32
}

/// `simple[mask]`: removing the center pixel changes neither the 8-connected
/// foreground nor the 4-connected background topology.
fn simple_table() -> &'static [bool; 256] {
    static TABLE: OnceLock<[bool; 256]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [false; 256];
        for (mask, entry) in table.iter_mut().enumerate() {
            let mask = mask as u8;
            let fg = ring_components(mask, true, |a, b| {
                a.0.abs_diff(b.0) <= 1 && a.1.abs_diff(b.1) <= 1
            });
            // background components that touch a 4-neighbor of the center
            let bg = ring_components(!mask, false, |a, b| {
                a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1
            });
            *entry = fg == 1 && bg == 1;
        }
        table
    })
}

fn ring_components(
    mask: u8,
    count_all: bool,
    adjacent: impl Fn((isize, isize), (isize, isize)) -> bool,
) -> usize {
    let mut seen = 0u8;
    let mut count = 0;
    for start in 0..8 {
        if mask & (1 << start) == 0 || seen & (1 << start) != 0 {
            continue;
        }
        let mut stack = vec![start];
        seen |= 1 << start;
        let mut touches_axis = false;
        while let Some(k) = stack.pop() {
            touches_axis |= k % 2 == 0;
            for (j, &pos) in RING.iter().enumerate() {
                if mask & (1 << j) != 0 && seen & (1 << j) == 0 && adjacent(RING[k], pos) {
                    seen |= 1 << j;
                    stack.push(j);
                }
            }
        }
        if count_all || touches_axis {
            count += 1;
        }
    }
    count
}
