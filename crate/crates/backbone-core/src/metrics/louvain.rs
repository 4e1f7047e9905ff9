//! Deterministic Louvain community detection: local moves scan nodes in
//! ascending id and accept only strictly positive modularity gains (ties
//! broken toward the smallest community id), followed by graph coarsening,
//! recursing until no node moves.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::metrics::Partition;

/// Weighted multigraph used on the coarse levels. `loops[v]` holds the
/// self-loop weight (counted once); weighted degrees include it twice.
struct LevelGraph {
    adj: Vec<Vec<(usize, f64)>>,
    loops: Vec<f64>,
}

impl LevelGraph {
    fn from_graph(g: &Graph) -> Self {
        let adj = (0..g.node_count())
            .map(|u| g.neighbors(u).iter().map(|&v| (v, 1.0)).collect())
            .collect();
        LevelGraph {
            adj,
            loops: vec![0.0; g.node_count()],
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn weighted_degree(&self, v: usize) -> f64 {
        self.adj[v].iter().map(|&(_, w)| w).sum::<f64>() + 2.0 * self.loops[v]
    }
}

/// One level of local moves. Returns the node-to-community map and whether
/// any node moved.
fn local_moves(level: &LevelGraph, total_weight_2m: f64) -> (Vec<usize>, bool) {
    let n = level.node_count();
    let mut community: Vec<usize> = (0..n).collect();
    let degrees: Vec<f64> = (0..n).map(|v| level.weighted_degree(v)).collect();
    let mut community_total: Vec<f64> = degrees.clone();
    let mut moved_any = false;

    loop {
        let mut moved_this_sweep = false;
        for v in 0..n {
            let current = community[v];
            // weight from v to each adjacent community
            let mut to_comm: HashMap<usize, f64> = HashMap::new();
            for &(u, w) in &level.adj[v] {
                *to_comm.entry(community[u]).or_insert(0.0) += w;
            }
            community_total[current] -= degrees[v];
            let gain_of = |comm: usize| {
                let w_in = to_comm.get(&comm).copied().unwrap_or(0.0);
                w_in - community_total[comm] * degrees[v] / total_weight_2m
            };
            let stay_gain = gain_of(current);

            let mut best_comm = current;
            let mut best_gain = stay_gain;
            for &comm in to_comm.keys() {
                if comm == current {
                    continue;
                }
                let gain = gain_of(comm);
                let better = gain > best_gain
                    || (gain == best_gain && best_comm != current && comm < best_comm);
                if better && gain > stay_gain {
                    best_comm = comm;
                    best_gain = gain;
                }
            }

            community_total[best_comm] += degrees[v];
            if best_comm != current {
                community[v] = best_comm;
                moved_this_sweep = true;
                moved_any = true;
            }
        }
        if !moved_this_sweep {
            break;
        }
    }
    (community, moved_any)
}

/// Contracts every community into one node, keeping intra-community weight
/// as self-loops. `community` must use dense ids.
fn coarsen(level: &LevelGraph, community: &[usize], blocks: usize) -> LevelGraph {
    let mut adj_maps: Vec<HashMap<usize, f64>> = vec![HashMap::new(); blocks];
    let mut loops = vec![0.0f64; blocks];
    for v in 0..level.node_count() {
        let cv = community[v];
        loops[cv] += level.loops[v];
        for &(u, w) in &level.adj[v] {
            let cu = community[u];
            if cu == cv {
                // every undirected intra edge is seen from both endpoints
                loops[cv] += w / 2.0;
            } else {
                *adj_maps[cv].entry(cu).or_insert(0.0) += w;
            }
        }
    }
    let adj = adj_maps
        .into_iter()
        .map(|map| {
            let mut list: Vec<(usize, f64)> = map.into_iter().collect();
            list.sort_unstable_by_key(|&(u, _)| u);
            list
        })
        .collect();
    LevelGraph { adj, loops }
}

/// Modularity-maximizing heuristic partition of the node set.
///
/// An edgeless graph yields the singleton partition.
pub fn louvain_communities(g: &Graph) -> Partition {
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Partition::singletons(n);
    }
    let total_weight_2m = 2.0 * g.edge_count() as f64;

    // node -> community of the finest level, refined level by level
    let mut membership: Vec<usize> = (0..n).collect();
    let mut level = LevelGraph::from_graph(g);

    loop {
        let (community, moved) = local_moves(&level, total_weight_2m);
        if !moved {
            break;
        }
        // densify community ids in ascending order of their old ids
        let mut sorted: Vec<usize> = {
            let mut seen: Vec<usize> = community.clone();
            seen.sort_unstable();
            seen.dedup();
            seen
        };
        let dense: HashMap<usize, usize> = sorted.drain(..).zip(0..).collect();
        let blocks = dense.len();
        let community: Vec<usize> = community.into_iter().map(|c| dense[&c]).collect();

        for slot in membership.iter_mut() {
            *slot = community[*slot];
        }
        if blocks == level.node_count() {
            break;
        }
        level = coarsen(&level, &community, blocks);
    }

    Partition::from_assignment(&membership)
}
