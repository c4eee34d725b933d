//! Oracles shared by the integration tests. None of them call into the
//! library code paths they are used to check.

#![allow(dead_code)]

use particle_segregation::BinaryEdgeMap;

/// Mean-absolute-difference Gini, sample-corrected by n / (n - 1).
pub fn mad_gini(y: &[u64]) -> f64 {
    let n = y.len() as f64;
    let mean = y.iter().sum::<u64>() as f64 / n;
    let mut abs_diff = 0.0;
    for &a in y {
        for &b in y {
            abs_diff += (a as f64 - b as f64).abs();
        }
    }
    abs_diff / (2.0 * n * n * mean) * n / (n - 1.0)
}

/// Number of 8-connected foreground components, by breadth-first labeling.
pub fn count_components(b: &BinaryEdgeMap) -> usize {
    let (w, h) = (b.width(), b.height());
    let mut label = vec![0usize; w * h];
    let mut next = 0;
    for sy in 0..h {
        for sx in 0..w {
            if !b.get(sx, sy) || label[sy * w + sx] != 0 {
                continue;
            }
            next += 1;
            label[sy * w + sx] = next;
            let mut queue = std::collections::VecDeque::from([(sx, sy)]);
            while let Some((x, y)) = queue.pop_front() {
                for ny in y.saturating_sub(1)..=(y + 1).min(h - 1) {
                    for nx in x.saturating_sub(1)..=(x + 1).min(w - 1) {
                        if b.get(nx, ny) && label[ny * w + nx] == 0 {
                            label[ny * w + nx] = next;
                            queue.push_back((nx, ny));
                        }
                    }
                }
            }
        }
    }
    next
}
