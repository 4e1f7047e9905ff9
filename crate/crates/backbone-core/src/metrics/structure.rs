//! Diameter of the largest component and the average local clustering
//! coefficient.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::metrics::{connected_components, MetricsError};
use crate::scoring::triangle_counts;

fn bfs_eccentricity(g: &Graph, source: usize, dist: &mut [i64]) -> usize {
    dist.iter_mut().for_each(|d| *d = -1);
    dist[source] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    let mut ecc = 0usize;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] < 0 {
                dist[v] = dist[u] + 1;
                ecc = ecc.max(dist[v] as usize);
                queue.push_back(v);
            }
        }
    }
    ecc
}

/// Exact diameter of the largest connected component (ties broken toward
/// the component containing the smallest node id), via BFS from each of its
/// nodes. A single-node component has diameter 0; the empty graph has none.
pub fn diameter_largest_component(g: &Graph) -> Result<usize, MetricsError> {
    let n = g.node_count();
    if n == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    let components = connected_components(g);
    let sizes = components.block_sizes();
    // block ids follow ascending smallest-member order; strict comparison
    // keeps the earlier block on size ties
    let mut largest = 0usize;
    for (b, &s) in sizes.iter().enumerate() {
        if s > sizes[largest] {
            largest = b;
        }
    }
    let members: Vec<usize> = (0..n).filter(|&v| components.block_of(v) == largest).collect();

    let diameter = members
        .par_iter()
        .map_init(
            || vec![-1i64; n],
            |dist, &source| bfs_eccentricity(g, source, dist),
        )
        .reduce(|| 0, usize::max);
    Ok(diameter)
}

/// Mean over all `n` nodes of the local clustering coefficient
/// `c(v) = 2 tri(v) / (d(v) (d(v)-1))`, with `c(v) = 0` for degree < 2.
pub fn avg_local_clustering(g: &Graph) -> Result<f64, MetricsError> {
    let n = g.node_count();
    if n == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    // per-node triangle degree: sum of per-edge triangle counts at the node
    // equals twice the number of triangles through it
    let per_edge = triangle_counts(g);
    let mut tri_sum = vec![0.0f64; n];
    for (&(u, v), &t) in g.edges().iter().zip(per_edge.values()) {
        tri_sum[u] += t;
        tri_sum[v] += t;
    }
    let mut total = 0.0;
    for (v, &t) in tri_sum.iter().enumerate() {
        let d = g.degree(v);
        if d >= 2 {
            total += t / (d * (d - 1)) as f64;
        }
    }
    Ok(total / n as f64)
}
