//! Node centralities: degree, PageRank by power iteration, and exact
//! betweenness via Brandes' algorithm.
//!
//! All three are deterministic and independent of the rayon thread count:
//! per-node values are computed by indexed collects, and the floating-point
//! betweenness accumulation sums fixed source chunks in a fixed order.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::metrics::MetricsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralityKind {
    Degree,
    PageRank,
    Betweenness,
}

/// One real value per node.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub kind: CentralityKind,
    pub values: Vec<f64>,
}

pub fn degree_centrality(g: &Graph) -> CentralityVector {
    CentralityVector {
        kind: CentralityKind::Degree,
        values: (0..g.node_count()).map(|v| g.degree(v) as f64).collect(),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PageRankConfig {
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        PageRankConfig {
            damping: 0.85,
            tolerance: 1e-9,
            max_iterations: 10_000,
        }
    }
}

/// Power iteration on the undirected graph, each edge acting as two arcs,
/// with uniform teleportation. Rank mass of isolated nodes is redistributed
/// uniformly, so the vector keeps summing to 1. Iterates until the L1
/// change drops below the tolerance.
pub fn pagerank(g: &Graph, config: &PageRankConfig) -> Result<CentralityVector, MetricsError> {
    let n = g.node_count();
    if n == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    let damping = config.damping;
    let mut rank = vec![1.0 / n as f64; n];
    for _ in 0..config.max_iterations {
        let dangling: f64 = (0..n)
            .filter(|&v| g.degree(v) == 0)
            .map(|v| rank[v])
            .sum();
        let base = (1.0 - damping) / n as f64 + damping * dangling / n as f64;
        let next: Vec<f64> = (0..n)
            .into_par_iter()
            .map(|v| {
                let inflow: f64 = g
                    .neighbors(v)
                    .iter()
                    .map(|&u| rank[u] / g.degree(u) as f64)
                    .sum();
                base + damping * inflow
            })
            .collect();
        let change: f64 = rank
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .sum();
        rank = next;
        if change < config.tolerance {
            return Ok(CentralityVector {
                kind: CentralityKind::PageRank,
                values: rank,
            });
        }
    }
    Err(MetricsError::NonConvergence(config.max_iterations))
}

/// Per-source Brandes pass: BFS shortest-path DAG, then dependency
/// back-propagation onto `acc`.
fn brandes_from(g: &Graph, source: usize, acc: &mut [f64], scratch: &mut BrandesScratch) {
    let BrandesScratch {
        dist,
        sigma,
        delta,
        order,
        queue,
    } = scratch;
    dist.iter_mut().for_each(|d| *d = -1);
    sigma.iter_mut().for_each(|s| *s = 0.0);
    delta.iter_mut().for_each(|d| *d = 0.0);
    order.clear();
    queue.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if dist[v] < 0 {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if dist[v] == dist[u] + 1 {
                sigma[v] += sigma[u];
            }
        }
    }
    for &v in order.iter().rev() {
        for &u in g.neighbors(v) {
            if dist[u] == dist[v] + 1 {
                delta[v] += sigma[v] / sigma[u] * (1.0 + delta[u]);
            }
        }
        if v != source {
            acc[v] += delta[v];
        }
    }
}

struct BrandesScratch {
    dist: Vec<i64>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl BrandesScratch {
    fn new(n: usize) -> Self {
        BrandesScratch {
            dist: vec![-1; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }
}

// Fixed number of source chunks: parallel speedup without letting the
// scheduling order touch the floating-point sums.
const BETWEENNESS_CHUNKS: usize = 64;

/// Exact betweenness, each unordered node pair counted once, unnormalized.
pub fn betweenness(g: &Graph) -> CentralityVector {
    let n = g.node_count();
    let chunk_size = n.div_ceil(BETWEENNESS_CHUNKS).max(1);
    let starts: Vec<usize> = (0..n).step_by(chunk_size).collect();
    let partials: Vec<Vec<f64>> = starts
        .par_iter()
        .map(|&start| {
            let mut acc = vec![0.0f64; n];
            let mut scratch = BrandesScratch::new(n);
            for source in start..(start + chunk_size).min(n) {
                brandes_from(g, source, &mut acc, &mut scratch);
            }
            acc
        })
        .collect();

    let mut values = vec![0.0f64; n];
    for partial in partials {
        for (v, x) in partial.into_iter().enumerate() {
            values[v] += x;
        }
    }
    // the source loop sees every ordered pair; halve for unordered pairs
    for v in &mut values {
        *v /= 2.0;
    }
    CentralityVector {
        kind: CentralityKind::Betweenness,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_values() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(degree_centrality(&g).values, vec![3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn pagerank_uniform_on_cycle() {
        let g = Graph::from_edges(4, (0..4).map(|i| (i, (i + 1) % 4)));
        let pr = pagerank(&g, &PageRankConfig::default()).unwrap();
        for &v in &pr.values {
            assert!((v - 0.25).abs() < 1e-9);
        }
    }

    #[test]
    fn pagerank_sums_to_one_with_isolated_node() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0)]);
        let pr = pagerank(&g, &PageRankConfig::default()).unwrap();
        let total: f64 = pr.values.iter().sum();
        assert!((total - 1.0).abs() < 1e-6);
        // the two isolated nodes are symmetric
        assert_eq!(pr.values[3], pr.values[4]);
    }

    #[test]
    fn pagerank_rejects_empty_graph() {
        let g = Graph::from_edges(0, []);
        assert!(matches!(
            pagerank(&g, &PageRankConfig::default()),
            Err(MetricsError::EmptyGraph)
        ));
    }

    #[test]
    fn betweenness_star() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let b = betweenness(&g);
        assert_eq!(b.values, vec![3.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn betweenness_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(betweenness(&g).values, vec![0.0, 2.0, 2.0, 0.0]);
    }

    #[test]
    fn betweenness_zero_on_complete_graph() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(betweenness(&g).values, vec![0.0; 4]);
    }
}
