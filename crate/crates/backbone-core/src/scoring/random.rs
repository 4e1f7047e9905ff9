//! Uniform random edge scores from a counter-based generator.

use rayon::prelude::*;

use crate::graph::Graph;
use crate::scoring::EdgeScores;

// splitmix64 finalizer; full avalanche on 64 bits.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Deterministic pseudo-uniform value in `[0, 1)` for edge `(u, v)` under
/// `seed`. Keyed by the edge identity alone, so the value does not depend
/// on evaluation order or thread count.
fn edge_unit(seed: u64, u: usize, v: usize) -> f64 {
    let key = ((u as u64) << 32) ^ (v as u64) ^ mix64(seed);
    let h = mix64(key.wrapping_add(mix64(u as u64 ^ (v as u64).rotate_left(17))));
    // top 53 bits -> [0,1)
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Scores every edge with an independent uniform value in `[0, 1)`.
/// Filtering by these scores selects a uniform random edge subset.
pub fn score_random(g: &Graph, seed: u64) -> EdgeScores {
    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| edge_unit(seed, u, v))
        .collect();
    EdgeScores::new("re", values)
}
