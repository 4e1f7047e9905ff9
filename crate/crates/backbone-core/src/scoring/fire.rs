//! Edge Forest Fire: repeated burning processes score each edge by how
//! often it is traversed. A fire starts at a random node, and every burning
//! node ignites a geometrically distributed number of its not-yet-burned
//! neighbors; burned nodes cannot burn again within the same fire.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::scoring::EdgeScores;

/// Burning parameters.
#[derive(Debug, Clone, Copy)]
pub struct FireParams {
    /// Spread probability in (0, 1); a burning node ignites on average
    /// `p / (1 - p)` neighbors.
    pub p: f64,
    /// Fires keep starting until total edge visits reach
    /// `target_visit_ratio * m`.
    pub target_visit_ratio: f64,
    pub seed: u64,
}

impl Default for FireParams {
    fn default() -> Self {
        FireParams {
            p: 0.95,
            target_visit_ratio: 5.0,
            seed: 1,
        }
    }
}

impl FireParams {
    pub fn validate(&self) -> Result<(), String> {
        if self.p <= 0.0 || self.p >= 1.0 || self.p.is_nan() {
            return Err(format!("spread probability {} outside (0, 1)", self.p));
        }
        if self.target_visit_ratio <= 0.0 || self.target_visit_ratio.is_nan() {
            return Err(format!(
                "target visit ratio {} must be positive",
                self.target_visit_ratio
            ));
        }
        Ok(())
    }
}

/// Geometric draw on {0, 1, 2, ...} with success probability `1 - p`,
/// via inverse transform; mean `p / (1 - p)`.
fn geometric(rng: &mut ChaCha8Rng, p: f64) -> usize {
    let u: f64 = rng.gen();
    let r = (1.0 - u).ln() / p.ln();
    if r >= usize::MAX as f64 {
        usize::MAX
    } else {
        r as usize
    }
}

fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Scores every edge by its accumulated visit count over the burning
/// processes. Fires run sequentially, each on its own RNG stream keyed by
/// `(seed, fire index)`, so the output depends only on `params`.
///
/// An edgeless graph yields an empty vector without running any fire.
pub fn score_edge_forest_fire(g: &Graph, params: &FireParams) -> EdgeScores {
    params.validate().expect("invalid fire parameters");
    let m = g.edge_count();
    if m == 0 {
        return EdgeScores::new("eff", Vec::new());
    }

    let target = params.target_visit_ratio * m as f64;
    let mut visits = vec![0u64; m];
    let mut total: u64 = 0;

    // burn stamps instead of per-fire clearing
    let mut burned = vec![0u64; g.node_count()];
    let mut queue: Vec<usize> = Vec::new();
    let mut fire_index: u64 = 0;

    while (total as f64) < target {
        fire_index += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(mix64(params.seed ^ mix64(fire_index)));
        let start = rng.gen_range(0..g.node_count());
        burned[start] = fire_index;
        queue.clear();
        queue.push(start);

        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let mut unburned: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| burned[v] != fire_index)
                .collect();
            let draw = geometric(&mut rng, params.p);
            let k = draw.min(unburned.len());
            // partial Fisher-Yates: uniform k-subset without replacement
            for i in 0..k {
                let j = rng.gen_range(i..unburned.len());
                unburned.swap(i, j);
                let v = unburned[i];
                visits[g.edge_id(u, v).expect("adjacent")] += 1;
                total += 1;
                burned[v] = fire_index;
                queue.push(v);
            }
        }
    }

    EdgeScores::new("eff", visits.into_iter().map(|c| c as f64).collect())
}
