//! Seeded random-graph generators used for benchmarks and experiments.
//! Output depends only on the arguments.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Uniform random graph with exactly `m` distinct edges (G(n, m)).
/// Panics if `m` exceeds the number of node pairs.
pub fn gnm_random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let pairs = n * (n - 1) / 2;
    assert!(m <= pairs, "requested {m} edges but only {pairs} pairs exist");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, edges)
}

/// Growing network with attachment and triad formation (a power-law
/// cluster model): every new node attaches a number of edges drawn
/// uniformly from `attach_lo..=attach_hi`. After the first edge, each
/// further edge closes a triangle with probability `triad_prob`; otherwise
/// the target is chosen preferentially with probability `pa_prob` and
/// uniformly at random else. Produces heavy-tailed degrees with a
/// heterogeneous bulk and substantial clustering, similar in shape to
/// social friendship networks; lowering `pa_prob` weakens the rich-club
/// interconnection of the hubs.
pub fn powerlaw_cluster_graph(
    n: usize,
    attach_lo: usize,
    attach_hi: usize,
    triad_prob: f64,
    pa_prob: f64,
    seed: u64,
) -> Graph {
    assert!(
        attach_lo >= 1 && attach_lo <= attach_hi && n > attach_hi,
        "need n > attach_hi >= attach_lo >= 1"
    );
    assert!((0.0..=1.0).contains(&triad_prob));
    assert!((0.0..=1.0).contains(&pa_prob));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * attach_hi);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    // each node id appears once per incident edge: uniform draws from this
    // list are degree-proportional
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * n * attach_hi);

    let add_edge = |edges: &mut Vec<(usize, usize)>,
                    adjacency: &mut Vec<Vec<usize>>,
                    endpoints: &mut Vec<usize>,
                    u: usize,
                    v: usize| {
        edges.push((u.min(v), u.max(v)));
        adjacency[u].push(v);
        adjacency[v].push(u);
        endpoints.push(u);
        endpoints.push(v);
    };

    // seed clique keeps early degrees positive
    for i in 0..=attach_hi {
        for j in i + 1..=attach_hi {
            add_edge(&mut edges, &mut adjacency, &mut endpoints, i, j);
        }
    }

    for v in attach_hi + 1..n {
        // log-uniform attachment count: heterogeneous bulk degrees
        let span = (attach_hi as f64 / attach_lo as f64).ln();
        let attach = ((attach_lo as f64 * (rng.gen::<f64>() * span).exp()) as usize)
            .clamp(attach_lo, attach_hi);
        let mut connected: HashSet<usize> = HashSet::with_capacity(attach);
        let mut last_target = usize::MAX;
        let mut placed = 0;
        let mut attempts = 0;
        while placed < attach && attempts < 200 * attach {
            attempts += 1;
            let triad = placed > 0 && last_target != usize::MAX && rng.gen::<f64>() < triad_prob;
            let target = if triad {
                let nbrs = &adjacency[last_target];
                nbrs[rng.gen_range(0..nbrs.len())]
            } else if rng.gen::<f64>() < pa_prob {
                endpoints[rng.gen_range(0..endpoints.len())]
            } else {
                rng.gen_range(0..v)
            };
            if target == v || connected.contains(&target) {
                continue;
            }
            connected.insert(target);
            add_edge(&mut edges, &mut adjacency, &mut endpoints, v, target);
            last_target = target;
            placed += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Decorates a graph with a low-degree fringe: `count` new nodes, each
/// attached by one edge (or two, with probability `two_edge_fraction`) to
/// uniformly random existing nodes. Real friendship networks carry such a
/// periphery, and it is where their longest shortest paths live.
pub fn with_pendant_fringe(g: &Graph, count: usize, two_edge_fraction: f64, seed: u64) -> Graph {
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for v in n..n + count {
        let first = rng.gen_range(0..n);
        edges.push((first, v));
        if rng.gen::<f64>() < two_edge_fraction {
            let mut second = rng.gen_range(0..n);
            while second == first {
                second = rng.gen_range(0..n);
            }
            edges.push((second, v));
        }
    }
    Graph::from_edges(n + count, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::avg_local_clustering;

    #[test]
    fn gnm_has_exact_edge_count_and_is_seeded() {
        let g = gnm_random_graph(50, 200, 7);
        assert_eq!(g.node_count(), 50);
        assert_eq!(g.edge_count(), 200);
        g.validate().unwrap();
        assert_eq!(gnm_random_graph(50, 200, 7), g);
        assert_ne!(gnm_random_graph(50, 200, 8), g);
    }

    #[test]
    fn powerlaw_cluster_is_clustered_and_skewed() {
        let g = powerlaw_cluster_graph(600, 3, 9, 0.7, 0.8, 3);
        g.validate().unwrap();
        assert!(g.edge_count() > 3 * 590);
        let cc = avg_local_clustering(&g).unwrap();
        assert!(cc > 0.1, "clustering {cc} unexpectedly low");
        let max_degree = (0..g.node_count()).map(|v| g.degree(v)).max().unwrap();
        assert!(max_degree > 30, "max degree {max_degree} lacks hubs");
    }

    #[test]
    fn fringe_adds_low_degree_nodes() {
        let core = powerlaw_cluster_graph(200, 3, 9, 0.5, 0.5, 1);
        let g = with_pendant_fringe(&core, 50, 0.3, 2);
        g.validate().unwrap();
        assert_eq!(g.node_count(), 250);
        for v in 200..250 {
            assert!(g.degree(v) >= 1 && g.degree(v) <= 2);
        }
        assert_eq!(with_pendant_fringe(&core, 50, 0.3, 2), g);
    }
}
