//! Simmelian backbone scores, non-parametric variant: the score of an edge
//! is the maximum Jaccard overlap of its endpoints' top-k rank-ordered
//! neighborhoods over all prefix lengths k.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::scoring::local::RankedNeighborhood;
use crate::scoring::{quadrilateral_embeddedness, triangle_counts, EdgeScores};

/// Which tie-strength key orders the neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimmelianStrength {
    /// Per-edge triangle counts (the triadic backbone, `ts`).
    Triadic,
    /// Quadrilateral edge embeddedness (`qls`).
    Quadrilateral,
}

/// Max over k of the Jaccard overlap between the two top-k prefixes.
/// Prefixes are treated as sets and may contain the opposite endpoint.
fn max_prefix_jaccard(a: &[usize], b: &[usize]) -> f64 {
    let mut in_a: HashSet<usize> = HashSet::with_capacity(a.len());
    let mut in_b: HashSet<usize> = HashSet::with_capacity(b.len());
    let mut intersection = 0usize;
    let mut best = 0.0f64;
    for k in 0..a.len().max(b.len()) {
        if let Some(&x) = a.get(k) {
            in_a.insert(x);
            if in_b.contains(&x) {
                intersection += 1;
            }
        }
        if let Some(&y) = b.get(k) {
            in_b.insert(y);
            if in_a.contains(&y) {
                intersection += 1;
            }
        }
        let union = in_a.len() + in_b.len() - intersection;
        if union > 0 {
            best = best.max(intersection as f64 / union as f64);
        }
    }
    best
}

/// Scores every edge by the maximal top-k neighborhood overlap, with
/// neighborhoods ranked by triangle counts or quadrilateral embeddedness.
pub fn score_simmelian(g: &Graph, strength: SimmelianStrength) -> EdgeScores {
    let (tag, key) = match strength {
        SimmelianStrength::Triadic => ("ts", triangle_counts(g)),
        SimmelianStrength::Quadrilateral => ("qls", quadrilateral_embeddedness(g)),
    };
    let ranked: Vec<RankedNeighborhood> = (0..g.node_count())
        .into_par_iter()
        .map(|u| {
            let pairs = g
                .neighbors(u)
                .iter()
                .map(|&v| (v, key.values()[g.edge_id(u, v).expect("adjacent")]))
                .collect();
            RankedNeighborhood::by_key(u, pairs)
        })
        .collect();

    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| max_prefix_jaccard(&ranked[u].neighbors, &ranked[v].neighbors))
        .collect();
    EdgeScores::new(tag, values)
}
