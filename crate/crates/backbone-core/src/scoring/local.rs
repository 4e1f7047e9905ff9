//! Rank-based local scorers. Both Local Similarity and Local Degree rank
//! the edges incident to each node by a strength key and translate the rank
//! into the smallest keep-parameter `alpha` for which the edge survives the
//! per-node "keep the top floor(d(u)^alpha) edges" rule; the edge score is
//! `1 - alpha`, minimized over both endpoints.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::scoring::{jaccard_scores, EdgeScores};

/// A node's neighbors sorted by a strength key, descending, ties broken by
/// ascending neighbor id.
#[derive(Debug, Clone)]
pub struct RankedNeighborhood {
    pub owner: usize,
    pub neighbors: Vec<usize>,
}

impl RankedNeighborhood {
    /// Ranks `(neighbor, key)` pairs by key descending, neighbor id
    /// ascending.
    pub fn by_key(owner: usize, mut pairs: Vec<(usize, f64)>) -> Self {
        rank_order(&mut pairs);
        RankedNeighborhood {
            owner,
            neighbors: pairs.into_iter().map(|(v, _)| v).collect(),
        }
    }
}

/// Key descending, neighbor id ascending; a total order since ids are
/// distinct within a neighborhood.
pub(crate) fn rank_order(pairs: &mut [(usize, f64)]) {
    pairs.sort_unstable_by(|a, b| match b.1.partial_cmp(&a.1).expect("finite keys") {
        Ordering::Equal => a.0.cmp(&b.0),
        other => other,
    });
}

/// Largest `(t, b)` with `t^b == d` and `b` maximal (so `t` is not itself a
/// perfect power). Returns `(d, 1)` when `d` is no perfect power.
fn primitive_power_base(d: u64) -> (u64, u32) {
    for b in (2..=d.ilog2().max(2)).rev() {
        let t = (d as f64).powf(1.0 / b as f64).round() as u64;
        for cand in t.saturating_sub(1)..=t + 1 {
            if cand >= 2 && cand.checked_pow(b) == Some(d) {
                return (cand, b);
            }
        }
    }
    (d, 1)
}

/// If `x = t^a` and `d = t^b` for a common integer base, returns `(a, b)`
/// so that `log_d(x)` can be evaluated as the exact rational `a/b`.
fn exact_log_ratio(x: u64, d: u64) -> Option<(u32, u32)> {
    let (t, b) = primitive_power_base(d);
    let mut val = 1u64;
    let mut a = 0u32;
    while val < x {
        val = val.checked_mul(t)?;
        a += 1;
    }
    (val == x).then_some((a, b))
}

/// Smallest `alpha` with `floor(d^alpha) >= rank + 1`: zero at rank 0, else
/// `log(rank+1) / log(d)`. Evaluated exactly when the ratio is rational so
/// that threshold filtering reproduces the integer keep rule bit for bit.
pub(crate) fn rank_alpha(rank: usize, degree: usize) -> f64 {
    if rank == 0 {
        return 0.0;
    }
    debug_assert!(degree >= 2, "rank {rank} impossible at degree {degree}");
    let x = (rank + 1) as u64;
    match exact_log_ratio(x, degree as u64) {
        Some((a, b)) => a as f64 / b as f64,
        None => (x as f64).ln() / (degree as f64).ln(),
    }
}

/// Shared rank-to-score pipeline: `key(u, v)` is the strength of neighbor
/// `v` as seen from `u`.
fn score_by_local_ranks<F>(g: &Graph, tag: &str, key: F) -> EdgeScores
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    let per_node: Vec<Vec<(usize, f64)>> = (0..g.node_count())
        .into_par_iter()
        .map(|u| {
            let mut pairs: Vec<(usize, f64)> =
                g.neighbors(u).iter().map(|&v| (v, key(u, v))).collect();
            rank_order(&mut pairs);
            let d = g.degree(u);
            pairs
                .into_iter()
                .enumerate()
                .map(|(rank, (v, _))| {
                    let id = g.edge_id(u, v).expect("ranked neighbor is adjacent");
                    (id, rank_alpha(rank, d))
                })
                .collect()
        })
        .collect();

    let mut min_alpha = vec![f64::INFINITY; g.edge_count()];
    for contributions in per_node {
        for (id, alpha) in contributions {
            if alpha < min_alpha[id] {
                min_alpha[id] = alpha;
            }
        }
    }
    EdgeScores::new(tag, min_alpha.into_iter().map(|a| 1.0 - a).collect())
}

/// Local Similarity: incident edges ranked by the Jaccard overlap of the
/// endpoint neighborhoods.
pub fn score_local_similarity(g: &Graph) -> EdgeScores {
    let jaccard = jaccard_scores(g);
    score_by_local_ranks(g, "ls", |u, v| {
        jaccard.values()[g.edge_id(u, v).expect("adjacent")]
    })
}

/// Local Degree: incident edges ranked by the neighbor's degree, keeping
/// edges that lead to local hubs.
pub fn score_local_degree(g: &Graph) -> EdgeScores {
    score_by_local_ranks(g, "ld", |_, v| g.degree(v) as f64)
}
