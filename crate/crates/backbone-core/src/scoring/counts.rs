//! Per-edge triangle and quadrangle machinery: raw counts, the Jaccard
//! similarity of endpoint neighborhoods, and quadrilateral embeddedness.

use rayon::prelude::*;

use crate::graph::Graph;
use crate::scoring::EdgeScores;

/// Size of the intersection of two sorted, strictly increasing slices.
pub(crate) fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut count = 0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> usize {
    sorted_intersection_size(g.neighbors(u), g.neighbors(v))
}

/// Number of triangles each edge belongs to: `T(u,v) = |N(u) ∩ N(v)|`.
pub fn triangle_counts(g: &Graph) -> EdgeScores {
    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| common_neighbors(g, u, v) as f64)
        .collect();
    EdgeScores::new("tri", values)
}

/// Jaccard overlap of the endpoint neighborhoods:
/// `J(u,v) = T(u,v) / (d(u) + d(v) - T(u,v))`.
///
/// For an edge both degrees are at least 1 and the triangle count is at most
/// `min(d(u), d(v)) - 1`, so the denominator is always positive.
pub fn jaccard_scores(g: &Graph) -> EdgeScores {
    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| {
            let t = common_neighbors(g, u, v) as f64;
            t / (g.degree(u) as f64 + g.degree(v) as f64 - t)
        })
        .collect();
    EdgeScores::new("js", values)
}

/// Quadrangles through edge `{u,v}`: 4-cycles u-x-y-v-u, counted as pairs
/// x in N(u)\{v}, y in N(v)\{u} with x != y and {x,y} an edge. The term
/// `|N(x) ∩ N(v)|` always includes u itself, hence the `- 1`.
fn quadrangles_of(g: &Graph, u: usize, v: usize) -> u64 {
    // iterate from the lower-degree side
    let (a, b) = if g.degree(u) <= g.degree(v) {
        (u, v)
    } else {
        (v, u)
    };
    let mut q = 0u64;
    for &x in g.neighbors(a) {
        if x == b {
            continue;
        }
        q += (sorted_intersection_size(g.neighbors(x), g.neighbors(b)) - 1) as u64;
    }
    q
}

/// Number of quadrangles (4-cycles) each edge belongs to.
pub fn quadrangle_counts(g: &Graph) -> EdgeScores {
    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| quadrangles_of(g, u, v) as f64)
        .collect();
    EdgeScores::new("q", values)
}

/// Per-node quadrangle sums `q(u) = Σ_v q(u,v)` derived from per-edge counts.
pub(crate) fn quadrangle_node_sums(g: &Graph, per_edge: &[f64]) -> Vec<f64> {
    let mut sums = vec![0.0; g.node_count()];
    for (&(u, v), &q) in g.edges().iter().zip(per_edge) {
        sums[u] += q;
        sums[v] += q;
    }
    sums
}

/// Quadrilateral edge embeddedness `Q(u,v) = q(u,v) / sqrt(q(u) * q(v))`,
/// with 0 whenever an endpoint has no quadrangles at all.
pub fn quadrilateral_embeddedness(g: &Graph) -> EdgeScores {
    let per_edge = quadrangle_counts(g);
    let sums = quadrangle_node_sums(g, per_edge.values());
    let values: Vec<f64> = g
        .edges()
        .par_iter()
        .zip(per_edge.values())
        .map(|(&(u, v), &q)| {
            let denom = sums[u] * sums[v];
            if denom == 0.0 {
                0.0
            } else {
                q / denom.sqrt()
            }
        })
        .collect();
    EdgeScores::new("qle", values)
}
