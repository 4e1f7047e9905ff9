//! Network sparsification toolkit: edge scoring, global filtering and
//! structural evaluation of the resulting backbones.
//!
//! Sparsification is split into two stages. First every edge of an
//! undirected graph receives an importance score ([`scoring`]), then the
//! edge set is filtered globally by those scores ([`sparsify`]). The
//! [`metrics`] module quantifies how well a backbone preserves diameter,
//! clustering, node centralities, components and community structure, and
//! [`experiment`] drives ratio sweeps, score correlation matrices and
//! timing runs over a graph corpus.

pub mod experiment;
pub mod generate;
pub mod graph;
pub mod metrics;
pub mod scoring;
pub mod sparsify;

pub use graph::Graph;
pub use scoring::EdgeScores;
pub use sparsify::SparsifiedGraph;
