//! Global filtering: turns an edge-score vector and a target ratio (or a
//! score threshold) into a backbone graph over the unchanged node set.

use thiserror::Error;

use crate::graph::Graph;
use crate::scoring::EdgeScores;

#[derive(Debug, Error)]
pub enum SparsifyError {
    #[error("score vector has {scores} entries but graph has {edges} edges")]
    LengthMismatch { scores: usize, edges: usize },
    #[error("ratio {0} outside [0, 1]")]
    RatioOutOfRange(f64),
}

/// How a backbone was selected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FilterRule {
    Ratio(f64),
    Threshold(f64),
}

/// A backbone: same node set, kept edges are a subset of the original ones.
#[derive(Debug, Clone)]
pub struct SparsifiedGraph {
    pub graph: Graph,
    /// Canonical ids (in the original graph) of the kept edges, ascending.
    pub kept_edge_ids: Vec<usize>,
    pub kept_ratio: f64,
    pub method: String,
    pub rule: FilterRule,
}

fn check(g: &Graph, scores: &EdgeScores) -> Result<(), SparsifyError> {
    if scores.len() != g.edge_count() {
        return Err(SparsifyError::LengthMismatch {
            scores: scores.len(),
            edges: g.edge_count(),
        });
    }
    Ok(())
}

fn backbone_from_ids(g: &Graph, scores: &EdgeScores, mut ids: Vec<usize>, rule: FilterRule) -> SparsifiedGraph {
    ids.sort_unstable();
    let edges = ids.iter().map(|&i| g.edges()[i]);
    let graph = Graph::from_edges(g.node_count(), edges);
    let kept_ratio = if g.edge_count() == 0 {
        1.0
    } else {
        ids.len() as f64 / g.edge_count() as f64
    };
    SparsifiedGraph {
        graph,
        kept_edge_ids: ids,
        kept_ratio,
        method: scores.method().to_string(),
        rule,
    }
}

/// Keeps exactly `round(ratio * m)` edges: the highest-scoring ones, ties
/// broken by ascending canonical edge id. All nodes are retained.
pub fn filter_by_ratio(
    g: &Graph,
    scores: &EdgeScores,
    ratio: f64,
) -> Result<SparsifiedGraph, SparsifyError> {
    check(g, scores)?;
    if !(0.0..=1.0).contains(&ratio) {
        return Err(SparsifyError::RatioOutOfRange(ratio));
    }
    let m = g.edge_count();
    let keep = (ratio * m as f64).round() as usize;
    let keep = keep.min(m);

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        scores.values()[b]
            .partial_cmp(&scores.values()[a])
            .expect("finite scores")
            .then(a.cmp(&b))
    });
    order.truncate(keep);
    Ok(backbone_from_ids(g, scores, order, FilterRule::Ratio(ratio)))
}

/// Keeps every edge whose score is at least `tau`.
pub fn filter_by_threshold(
    g: &Graph,
    scores: &EdgeScores,
    tau: f64,
) -> Result<SparsifiedGraph, SparsifyError> {
    check(g, scores)?;
    let ids: Vec<usize> = (0..g.edge_count())
        .filter(|&i| scores.values()[i] >= tau)
        .collect();
    Ok(backbone_from_ids(g, scores, ids, FilterRule::Threshold(tau)))
}
