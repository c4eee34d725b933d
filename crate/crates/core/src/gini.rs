//! Gini-style segregation index over per-cell edge lengths.
//!
//! With lengths sorted ascending into `y(1) <= ... <= y(n)`:
//!
//! ```text
//! index = (n + 1 - 2 * sum_i (n + 1 - i) * y(i) / sum_i y(i)) / (n - 1)
//! ```
//!
//! which is 0 when every cell holds the same length and 1 when a single cell
//! holds all of it. Both sums are accumulated as exact integers, so the only
//! rounding is the final division.

use crate::{Error, Result};

/// Segregation index of `y`. A single cell gives 0; an all-zero vector is
/// [`Error::NoEdges`].
pub fn gini_index(y: &[u64]) -> Result<f64> {
    let (numerator, denominator) = gini_ratio(y)?;
    Ok(numerator as f64 / denominator as f64)
}

/// The index as an exact fraction `(numerator, denominator)`.
pub fn gini_ratio(y: &[u64]) -> Result<(u128, u128)> {
    let total: u128 = y.iter().map(|&v| u128::from(v)).sum();
    if total == 0 {
        return Err(Error::NoEdges);
    }
    let n = y.len() as u128;
    if n == 1 {
        return Ok((0, 1));
    }
    let mut sorted = y.to_vec();
    sorted.sort_unstable();
    let weighted: u128 = sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| (n - i as u128) * u128::from(v))
        .sum();
    // ascending order puts the largest weights on the smallest values, so
    // weighted <= (n + 1) * total / 2 and the numerator is non-negative
    Ok(((n + 1) * total - 2 * weighted, (n - 1) * total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_values() {
        assert_eq!(gini_index(&[1, 1, 1, 1]).unwrap(), 0.0);
        assert_eq!(gini_index(&[0, 0, 0, 7]).unwrap(), 1.0);
        assert_eq!(gini_index(&[7, 0, 0, 0]).unwrap(), 1.0);
        assert_eq!(gini_index(&[5]).unwrap(), 0.0);
    }

    #[test]
    fn spot_value() {
        // mean absolute difference: sum_{i,j} |yi - yj| = 20, mean 2.5, n = 4
        // 20 / (2 * 16 * 2.5) = 0.25, times n / (n - 1) = 1/3
        assert!((gini_index(&[1, 2, 3, 4]).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(gini_ratio(&[4, 3, 2, 1]).unwrap(), (10, 30));
    }

    #[test]
    fn no_edges() {
        assert!(matches!(gini_index(&[0, 0, 0]), Err(Error::NoEdges)));
        assert!(matches!(gini_index(&[0]), Err(Error::NoEdges)));
        assert!(matches!(gini_index(&[]), Err(Error::NoEdges)));
    }
}
