//! Brute-force oracles and fixtures shared by the integration suites.
//! Everything here recomputes results from first principles, independent of
//! the library's algorithmic code paths.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::{Mutex, MutexGuard};

use num_bigint::BigUint;

use backbone_core::graph::Graph;

static SERIAL: Mutex<()> = Mutex::new(());

/// Serializes tests within one binary; the timing-sensitive acceptance
/// criteria must not contend with each other for cores.
pub fn serial_guard() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// Two K4s joined by the bridge (3, 4).
pub fn clique_pair_with_bridge() -> Graph {
    let mut edges = Vec::new();
    for base in [0, 4] {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((base + i, base + j));
            }
        }
    }
    edges.push((3, 4));
    Graph::from_edges(8, edges)
}

/// Per-edge triangle counts by enumerating every node triple.
pub fn brute_triangles(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; g.edge_count()];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    counts[g.edge_id(a, b).unwrap()] += 1;
                    counts[g.edge_id(b, c).unwrap()] += 1;
                    counts[g.edge_id(a, c).unwrap()] += 1;
                }
            }
        }
    }
    counts
}

/// Per-edge quadrangle counts by enumerating every 4-subset and each of the
/// three distinct cyclic arrangements it admits.
pub fn brute_quadrangles(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; g.edge_count()];
    let bump = |counts: &mut Vec<u64>, cycle: [usize; 4]| {
        for i in 0..4 {
            let (x, y) = (cycle[i], cycle[(i + 1) % 4]);
            counts[g.edge_id(x, y).unwrap()] += 1;
        }
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // the 3 arrangements of {a,b,c,d} into a 4-cycle
                    for cycle in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        let ok = (0..4)
                            .all(|i| g.has_edge(cycle[i], cycle[(i + 1) % 4]));
                        if ok {
                            bump(&mut counts, cycle);
                        }
                    }
                }
            }
        }
    }
    counts
}

/// Betweenness by enumerating every simple path between every node pair and
/// keeping the shortest ones. Each unordered pair is counted once.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut values = vec![0.0f64; n];
    for s in 0..n {
        for t in s + 1..n {
            let mut shortest: Vec<Vec<usize>> = Vec::new();
            let mut best = usize::MAX;
            let mut stack = vec![s];
            let mut visited = vec![false; n];
            visited[s] = true;
            enumerate_paths(g, t, &mut stack, &mut visited, &mut best, &mut shortest);
            if shortest.is_empty() {
                continue;
            }
            let sigma = shortest.len() as f64;
            for path in &shortest {
                for &v in &path[1..path.len() - 1] {
                    values[v] += 1.0 / sigma;
                }
            }
        }
    }
    values
}

fn enumerate_paths(
    g: &Graph,
    target: usize,
    stack: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    best: &mut usize,
    shortest: &mut Vec<Vec<usize>>,
) {
    let u = *stack.last().unwrap();
    if u == target {
        let len = stack.len() - 1;
        if len < *best {
            *best = len;
            shortest.clear();
        }
        if len == *best {
            shortest.push(stack.clone());
        }
        return;
    }
    if stack.len() > *best {
        return; // cannot improve
    }
    for &v in g.neighbors(u) {
        if !visited[v] {
            visited[v] = true;
            stack.push(v);
            enumerate_paths(g, target, stack, visited, best, shortest);
            stack.pop();
            visited[v] = false;
        }
    }
}

/// Modularity of a node-to-block assignment, straight from the definition.
pub fn brute_modularity(g: &Graph, assignment: &[usize]) -> f64 {
    let m = g.edge_count() as f64;
    let blocks = assignment.iter().copied().max().map_or(0, |b| b + 1);
    let mut intra = vec![0.0f64; blocks];
    let mut degree = vec![0.0f64; blocks];
    for &(u, v) in g.edges() {
        if assignment[u] == assignment[v] {
            intra[assignment[u]] += 1.0;
        }
    }
    for v in 0..g.node_count() {
        degree[assignment[v]] += g.degree(v) as f64;
    }
    (0..blocks)
        .map(|c| intra[c] / m - (degree[c] / (2.0 * m)).powi(2))
        .sum()
}

/// All partitions of `n` nodes into at most `max_blocks` blocks, as
/// restricted-growth strings.
pub fn enumerate_partitions(n: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    fn recurse(
        i: usize,
        used: usize,
        max_blocks: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == assignment.len() {
            out.push(assignment.clone());
            return;
        }
        for b in 0..=used.min(max_blocks - 1) {
            assignment[i] = b;
            let next_used = used.max(b + 1);
            recurse(i + 1, next_used, max_blocks, assignment, out);
        }
    }
    recurse(0, 0, max_blocks, &mut assignment, &mut out);
    out
}

/// Maximum-modularity partitions among all partitions into at most
/// `max_blocks` blocks.
pub fn exhaustive_best_partitions(g: &Graph, max_blocks: usize) -> (f64, Vec<Vec<usize>>) {
    let mut best = f64::NEG_INFINITY;
    let mut argmax = Vec::new();
    for assignment in enumerate_partitions(g.node_count(), max_blocks) {
        let q = brute_modularity(g, &assignment);
        if q > best + 1e-12 {
            best = q;
            argmax = vec![assignment];
        } else if (q - best).abs() <= 1e-12 {
            argmax.push(assignment);
        }
    }
    (best, argmax)
}

/// Exact `floor(d^(num/den))`: the largest integer `t` with
/// `t^den <= d^num`, evaluated in arbitrary precision.
pub fn exact_floor_power(d: u64, num: u32, den: u32) -> u64 {
    assert!(den > 0);
    let target = BigUint::from(d).pow(num);
    let (mut lo, mut hi) = (0u64, d.max(1));
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if BigUint::from(mid).pow(den) <= target {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Direct simulation of the per-node keep rule at `alpha = num/den`: the
/// union over nodes of their top `floor(d^alpha)` incident edges, ranked by
/// `key` descending with ascending neighbor-id tie-break.
pub fn keep_rule_edges<F>(g: &Graph, num: u32, den: u32, key: F) -> HashSet<usize>
where
    F: Fn(usize, usize) -> f64,
{
    let mut kept = HashSet::new();
    for u in 0..g.node_count() {
        let mut ranked: Vec<usize> = g.neighbors(u).to_vec();
        ranked.sort_by(|&a, &b| {
            key(u, b)
                .partial_cmp(&key(u, a))
                .unwrap()
                .then(a.cmp(&b))
        });
        let keep = exact_floor_power(g.degree(u) as u64, num, den) as usize;
        for &v in ranked.iter().take(keep) {
            kept.insert(g.edge_id(u, v).unwrap());
        }
    }
    kept
}

/// Neighborhood Jaccard computed from scratch for the keep-rule oracle.
pub fn oracle_jaccard(g: &Graph, u: usize, v: usize) -> f64 {
    let nu: HashSet<usize> = g.neighbors(u).iter().copied().collect();
    let shared = g.neighbors(v).iter().filter(|x| nu.contains(x)).count() as f64;
    shared / (g.degree(u) as f64 + g.degree(v) as f64 - shared)
}

/// Spearman's rho recomputed independently: ranks by explicit pair
/// averaging, then the textbook Pearson formula.
pub fn oracle_spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let n = v.len();
        let mut r = vec![0.0; n];
        for i in 0..n {
            let less = v.iter().filter(|&&a| a < v[i]).count() as f64;
            let equal = v.iter().filter(|&&a| a == v[i]).count() as f64;
            // average of positions less+1 ..= less+equal
            r[i] = less + (equal + 1.0) / 2.0;
        }
        r
    }
    let rx = ranks(x);
    let ry = ranks(y);
    let n = rx.len() as f64;
    let sx: f64 = rx.iter().sum();
    let sy: f64 = ry.iter().sum();
    let sxy: f64 = rx.iter().zip(&ry).map(|(a, b)| a * b).sum();
    let sxx: f64 = rx.iter().map(|a| a * a).sum();
    let syy: f64 = ry.iter().map(|a| a * a).sum();
    (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt())
}

/// Average local clustering recomputed from the definition: for each node,
/// the fraction of adjacent neighbor pairs.
pub fn brute_avg_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    let mut total = 0.0;
    for v in 0..n {
        let nbrs = g.neighbors(v);
        let d = nbrs.len();
        if d < 2 {
            continue;
        }
        let mut closed = 0usize;
        for i in 0..d {
            for j in i + 1..d {
                if g.has_edge(nbrs[i], nbrs[j]) {
                    closed += 1;
                }
            }
        }
        total += 2.0 * closed as f64 / (d * (d - 1)) as f64;
    }
    total / n as f64
}

/// Seeded random graph with n <= `max_n`, edge probability drawn per graph.
pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let p: f64 = rng.gen_range(0.05..0.75);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
