//! Experimental protocol: per-method ratio sweeps with a fixed measure
//! catalog, corpus aggregation, the edge-score correlation matrix, and
//! scoring-time measurements.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::metrics::{
    avg_local_clustering, betweenness, connected_components, degree_centrality,
    diameter_largest_component, louvain_communities, nmi, pagerank, spearman_rho, Partition,
    PageRankConfig,
};
use crate::scoring::{score_method, EdgeScores, FireParams, Method, ScoreParams};
use crate::sparsify::filter_by_ratio;

/// The measure catalog evaluated for every (method, ratio) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    DiameterQuotient,
    CcDeviation,
    SpearmanDegree,
    SpearmanPagerank,
    SpearmanBetweenness,
    NmiCommunities,
    NmiComponents,
    CommunityCountQuotient,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::DiameterQuotient,
        Measure::CcDeviation,
        Measure::SpearmanDegree,
        Measure::SpearmanPagerank,
        Measure::SpearmanBetweenness,
        Measure::NmiCommunities,
        Measure::NmiComponents,
        Measure::CommunityCountQuotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::DiameterQuotient => "diameter-quotient",
            Measure::CcDeviation => "cc-deviation",
            Measure::SpearmanDegree => "spearman-degree",
            Measure::SpearmanPagerank => "spearman-pagerank",
            Measure::SpearmanBetweenness => "spearman-betweenness",
            Measure::NmiCommunities => "nmi-communities",
            Measure::NmiComponents => "nmi-components",
            Measure::CommunityCountQuotient => "community-count-quotient",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One row of the evaluation matrix. `value` is `None` where the measure is
/// undefined on the backbone (for example the diameter quotient of an
/// edgeless backbone); such sentinel rows are excluded from aggregation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub graph: String,
    pub method: String,
    pub ratio: f64,
    #[serde(serialize_with = "serialize_measure")]
    pub measure: Measure,
    pub value: Option<f64>,
}

fn serialize_measure<S: serde::Serializer>(m: &Measure, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

/// Sweep configuration: which methods, which kept-edge ratios, and the
/// parameters of the seeded scorers.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub methods: Vec<Method>,
    pub ratios: Vec<f64>,
    pub seed: u64,
    pub fire: FireParams,
    pub pagerank: PageRankConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            methods: Method::ALL.to_vec(),
            ratios: default_ratio_grid(),
            seed: 1,
            fire: FireParams::default(),
            pagerank: PageRankConfig::default(),
        }
    }
}

/// The ratio grid used by the reference plots: 0.05, 0.10, ..., 1.00.
pub fn default_ratio_grid() -> Vec<f64> {
    (1..=20).map(|k| k as f64 / 20.0).collect()
}

impl SweepConfig {
    fn score_params(&self) -> ScoreParams {
        ScoreParams {
            seed: self.seed,
            fire: self.fire,
        }
    }
}

/// Everything about the original graph that the measures compare against,
/// computed once per graph and shared across all (method, ratio) cells.
struct Baseline {
    diameter: Option<usize>,
    clustering: Option<f64>,
    degree: Vec<f64>,
    pagerank: Option<Vec<f64>>,
    betweenness: Vec<f64>,
    communities: Partition,
    components: Partition,
}

impl Baseline {
    fn compute(g: &Graph, pr: &PageRankConfig) -> Self {
        Baseline {
            diameter: diameter_largest_component(g).ok(),
            clustering: avg_local_clustering(g).ok(),
            degree: degree_centrality(g).values,
            pagerank: pagerank(g, pr).ok().map(|c| c.values),
            betweenness: betweenness(g).values,
            communities: louvain_communities(g),
            components: connected_components(g),
        }
    }
}

fn measure_backbone(
    backbone: &Graph,
    baseline: &Baseline,
    pr: &PageRankConfig,
) -> [Option<f64>; 8] {
    let diameter = diameter_largest_component(backbone).ok();
    let quotient = match (baseline.diameter, diameter) {
        (Some(orig), Some(sparse)) if sparse > 0 => Some(orig as f64 / sparse as f64),
        _ => None,
    };
    let cc_deviation = match (baseline.clustering, avg_local_clustering(backbone).ok()) {
        (Some(orig), Some(sparse)) => Some(sparse - orig),
        _ => None,
    };
    let sp_degree = spearman_rho(&baseline.degree, &degree_centrality(backbone).values).ok();
    let sp_pagerank = match (&baseline.pagerank, pagerank(backbone, pr).ok()) {
        (Some(orig), Some(sparse)) => spearman_rho(orig, &sparse.values).ok(),
        _ => None,
    };
    let sp_betweenness =
        spearman_rho(&baseline.betweenness, &betweenness(backbone).values).ok();
    let communities = louvain_communities(backbone);
    let nmi_communities = nmi(&baseline.communities, &communities).ok();
    let nmi_components = nmi(&baseline.components, &connected_components(backbone)).ok();
    let community_quotient = if communities.block_count() > 0 {
        Some(baseline.communities.block_count() as f64 / communities.block_count() as f64)
    } else {
        None
    };
    [
        quotient,
        cc_deviation,
        sp_degree,
        sp_pagerank,
        sp_betweenness,
        nmi_communities,
        nmi_components,
        community_quotient,
    ]
}

/// Runs the full measure catalog for every (method, ratio) pair on one
/// graph. Each method is scored once; all ratios reuse that score vector,
/// so backbones are nested along the ratio axis.
pub fn run_sweep(g: &Graph, graph_name: &str, config: &SweepConfig) -> Vec<SweepRecord> {
    let baseline = Baseline::compute(g, &config.pagerank);
    let params = config.score_params();

    let scored: Vec<(Method, EdgeScores)> = config
        .methods
        .iter()
        .map(|&m| (m, score_method(g, m, &params)))
        .collect();

    let cells: Vec<(usize, usize)> = (0..scored.len())
        .flat_map(|mi| (0..config.ratios.len()).map(move |ri| (mi, ri)))
        .collect();

    let per_cell: Vec<[Option<f64>; 8]> = cells
        .par_iter()
        .map(|&(mi, ri)| {
            let (_, scores) = &scored[mi];
            let backbone = filter_by_ratio(g, scores, config.ratios[ri])
                .expect("scores were computed on this graph");
            measure_backbone(&backbone.graph, &baseline, &config.pagerank)
        })
        .collect();

    let mut records = Vec::with_capacity(cells.len() * Measure::ALL.len());
    for (&(mi, ri), values) in cells.iter().zip(per_cell) {
        let (method, _) = &scored[mi];
        for (measure, value) in Measure::ALL.into_iter().zip(values) {
            records.push(SweepRecord {
                graph: graph_name.to_string(),
                method: method.tag().to_string(),
                ratio: config.ratios[ri],
                measure,
                value,
            });
        }
    }
    records
}

/// Sweeps every graph of a corpus; graphs are processed in parallel and
/// records merged in corpus order.
pub fn run_corpus_sweep(graphs: &[(String, Graph)], config: &SweepConfig) -> Vec<SweepRecord> {
    graphs
        .par_iter()
        .map(|(name, g)| run_sweep(g, name, config))
        .reduce(Vec::new, |mut acc, mut part| {
            acc.append(&mut part);
            acc
        })
}

/// Indicator scores from community structure: 1 for intra-community edges,
/// 0 for inter-community edges under the deterministic Louvain partition.
pub fn mod_indicator(g: &Graph) -> EdgeScores {
    let partition = louvain_communities(g);
    let values = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if partition.block_of(u) == partition.block_of(v) {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    EdgeScores::new("mod", values)
}

/// Pairwise Spearman correlation of edge-score vectors, averaged over a
/// corpus. The label set is the chosen methods plus `mod`.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    pub labels: Vec<String>,
    /// `cells[i][j]`: mean correlation, `None` when no graph contributed.
    pub cells: Vec<Vec<Option<f64>>>,
    /// Graphs excluded per pair because one score vector was constant.
    pub excluded: Vec<Vec<usize>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        self.cells[i][j]
    }
}

/// Computes the correlation matrix over the corpus. For each graph the edge
/// scores of all methods plus the community indicator are compared with
/// Spearman's rank correlation; cells average over graphs. Graphs on which
/// a vector is constant are excluded from that pair's average and counted.
pub fn score_correlation_matrix(
    graphs: &[(String, Graph)],
    methods: &[Method],
    config: &SweepConfig,
) -> CorrelationMatrix {
    let labels: Vec<String> = methods
        .iter()
        .map(|m| m.tag().to_string())
        .chain(std::iter::once("mod".to_string()))
        .collect();
    let k = labels.len();
    let params = config.score_params();

    let per_graph: Vec<Vec<Vec<Option<f64>>>> = graphs
        .par_iter()
        .map(|(_, g)| {
            let mut vectors: Vec<EdgeScores> = methods
                .iter()
                .map(|&m| score_method(g, m, &params))
                .collect();
            vectors.push(mod_indicator(g));
            let mut matrix = vec![vec![None; k]; k];
            for i in 0..k {
                matrix[i][i] = Some(1.0);
                for j in i + 1..k {
                    let rho = spearman_rho(vectors[i].values(), vectors[j].values()).ok();
                    matrix[i][j] = rho;
                    matrix[j][i] = rho;
                }
            }
            matrix
        })
        .collect();

    let mut sums = vec![vec![0.0f64; k]; k];
    let mut counts = vec![vec![0usize; k]; k];
    let mut excluded = vec![vec![0usize; k]; k];
    for matrix in &per_graph {
        for i in 0..k {
            for j in 0..k {
                match matrix[i][j] {
                    Some(v) => {
                        sums[i][j] += v;
                        counts[i][j] += 1;
                    }
                    None => excluded[i][j] += 1,
                }
            }
        }
    }
    let cells = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if counts[i][j] > 0 {
                        Some(sums[i][j] / counts[i][j] as f64)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    CorrelationMatrix {
        labels,
        cells,
        excluded,
    }
}

/// Aggregated sweep cell: mean over the defined per-graph values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateRow {
    pub method: String,
    pub ratio: f64,
    #[serde(serialize_with = "serialize_measure")]
    pub measure: Measure,
    /// `None` when every contributing record was undefined.
    pub mean: Option<f64>,
    pub defined: usize,
    pub excluded: usize,
}

/// Means per (method, ratio, measure) over all graphs in the record set;
/// undefined sentinels are excluded and counted.
pub fn aggregate(records: &[SweepRecord]) -> Vec<AggregateRow> {
    // keyed by (method, ratio bits, measure); rows keep first-seen order
    let mut index: HashMap<(String, u64, Measure), usize> = HashMap::new();
    let mut rows: Vec<(String, f64, Measure, f64, usize, usize)> = Vec::new();
    for r in records {
        let key = (r.method.clone(), r.ratio.to_bits(), r.measure);
        let slot = *index.entry(key).or_insert_with(|| {
            rows.push((r.method.clone(), r.ratio, r.measure, 0.0, 0, 0));
            rows.len() - 1
        });
        match r.value {
            Some(v) => {
                rows[slot].3 += v;
                rows[slot].4 += 1;
            }
            None => rows[slot].5 += 1,
        }
    }
    rows.into_iter()
        .map(|(method, ratio, measure, sum, defined, excluded)| AggregateRow {
            method,
            ratio,
            measure,
            mean: (defined > 0).then(|| sum / defined as f64),
            defined,
            excluded,
        })
        .collect()
}

/// Wall-clock seconds for the scoring stage of one method on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct TimingRecord {
    pub graph: String,
    pub method: String,
    pub seconds: f64,
}

/// Times the scoring stage per (graph, method): one warm-up run, then the
/// best of three. Runs are pinned to a single-thread pool so measurements
/// do not depend on the surrounding pool size.
pub fn time_methods(
    graphs: &[(String, Graph)],
    methods: &[Method],
    config: &SweepConfig,
) -> Vec<TimingRecord> {
    let params = config.score_params();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    let mut records = Vec::new();
    for (name, g) in graphs {
        for &method in methods {
            let seconds = pool.install(|| {
                score_method(g, method, &params); // warm-up
                (0..3)
                    .map(|_| {
                        let start = Instant::now();
                        score_method(g, method, &params);
                        start.elapsed().as_secs_f64()
                    })
                    .fold(f64::INFINITY, f64::min)
            });
            records.push(TimingRecord {
                graph: name.clone(),
                method: method.tag().to_string(),
                seconds,
            });
        }
    }
    records
}

fn value_or_undefined(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| x.to_string())
}

/// Renders sweep records as CSV with header `graph,method,ratio,measure,value`.
pub fn records_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from("graph,method,ratio,measure,value\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.graph,
            r.method,
            r.ratio,
            r.measure,
            value_or_undefined(r.value)
        ));
    }
    out
}

/// Renders sweep records as a JSON array (undefined values become null).
pub fn records_json(records: &[SweepRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// Renders an aggregated table as CSV.
pub fn aggregate_csv(rows: &[AggregateRow]) -> String {
    let mut out = String::from("method,ratio,measure,mean,defined,excluded\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.method,
            r.ratio,
            r.measure,
            value_or_undefined(r.mean),
            r.defined,
            r.excluded
        ));
    }
    out
}

/// Renders the correlation matrix as CSV with a label header row and column.
pub fn matrix_csv(matrix: &CorrelationMatrix) -> String {
    let mut out = String::from("method");
    for label in &matrix.labels {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    for (label, row) in matrix.labels.iter().zip(&matrix.cells) {
        out.push_str(label);
        for &cell in row {
            out.push(',');
            out.push_str(&value_or_undefined(cell));
        }
        out.push('\n');
    }
    out
}

/// Renders timing records as CSV.
pub fn timings_csv(records: &[TimingRecord]) -> String {
    let mut out = String::from("graph,method,seconds\n");
    for r in records {
        out.push_str(&format!("{},{},{}\n", r.graph, r.method, r.seconds));
    }
    out
}
