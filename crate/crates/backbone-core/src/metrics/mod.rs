//! Network properties and similarity measures: components, diameter,
//! clustering, node centralities, Louvain communities, NMI and Spearman
//! rank correlation.

mod centrality;
mod compare;
mod louvain;
mod partition;
mod structure;

use std::io::Write;

use thiserror::Error;

pub use centrality::{betweenness, degree_centrality, pagerank, CentralityKind, CentralityVector, PageRankConfig};
pub use compare::{diameter_quotient, nmi, spearman_rho};
pub use louvain::louvain_communities;
pub use partition::{connected_components, Partition};
pub use structure::{avg_local_clustering, diameter_largest_component};

/// Writes a partition as one `node block` line per node.
pub fn write_partition<W: Write>(p: &Partition, mut w: W) -> std::io::Result<()> {
    for v in 0..p.len() {
        writeln!(w, "{v} {}", p.block_of(v))?;
    }
    Ok(())
}

/// Writes a centrality vector as one `node value` line per node.
pub fn write_centrality<W: Write>(c: &CentralityVector, mut w: W) -> std::io::Result<()> {
    for (v, value) in c.values.iter().enumerate() {
        writeln!(w, "{v} {value}")?;
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("metric undefined on an empty graph")]
    EmptyGraph,
    #[error("rank correlation undefined for a constant vector")]
    ConstantVector,
    #[error("inputs have mismatched lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("rank correlation needs at least two observations")]
    TooFewObservations,
    #[error("power iteration did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("diameter quotient undefined: sparsified diameter is zero")]
    ZeroDiameter,
}
