//! Edge-importance scores: one real value per canonical edge, higher means
//! more important. Seven scoring methods are provided; all of them are
//! deterministic for a fixed seed and independent of the thread count.

mod counts;
mod fire;
mod local;
mod random;
mod simmelian;

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

pub use counts::{jaccard_scores, quadrangle_counts, quadrilateral_embeddedness, triangle_counts};
pub use fire::{score_edge_forest_fire, FireParams};
pub use local::{score_local_degree, score_local_similarity, RankedNeighborhood};
pub use random::score_random;
pub use simmelian::{score_simmelian, SimmelianStrength};

#[derive(Debug, Error)]
pub enum ScoreError {
    #[error("unknown method tag `{0}`")]
    UnknownMethod(String),
    #[error("invalid fire parameters: {0}")]
    InvalidFireParams(String),
    #[error("score file: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// One score per edge, aligned with the graph's canonical edge ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeScores {
    method: String,
    values: Vec<f64>,
}

impl EdgeScores {
    /// Wraps a score vector. Panics if any value is non-finite; scorers must
    /// never emit NaN or infinities.
    pub fn new(method: impl Into<String>, values: Vec<f64>) -> Self {
        let method = method.into();
        assert!(
            values.iter().all(|v| v.is_finite()),
            "non-finite score produced by {method}"
        );
        EdgeScores { method, values }
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The seven scoring methods, by tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Uniform random scores (`re`).
    Random,
    /// Per-edge triangle count (`tri`).
    Triangles,
    /// Jaccard similarity of endpoint neighborhoods (`js`).
    Jaccard,
    /// Local similarity rank score (`ls`).
    LocalSimilarity,
    /// Local degree rank score (`ld`).
    LocalDegree,
    /// Triadic Simmelian backbone score (`ts`).
    SimmelianTriadic,
    /// Quadrilateral Simmelian backbone score (`qls`).
    SimmelianQuadrilateral,
    /// Edge forest fire visit counts (`eff`).
    ForestFire,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Random,
        Method::Triangles,
        Method::Jaccard,
        Method::LocalSimilarity,
        Method::LocalDegree,
        Method::SimmelianTriadic,
        Method::SimmelianQuadrilateral,
        Method::ForestFire,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Random => "re",
            Method::Triangles => "tri",
            Method::Jaccard => "js",
            Method::LocalSimilarity => "ls",
            Method::LocalDegree => "ld",
            Method::SimmelianTriadic => "ts",
            Method::SimmelianQuadrilateral => "qls",
            Method::ForestFire => "eff",
        }
    }

    /// True for methods whose output depends only on the graph.
    pub fn is_deterministic(self) -> bool {
        !matches!(self, Method::Random | Method::ForestFire)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = ScoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| ScoreError::UnknownMethod(s.to_string()))
    }
}

/// Per-run knobs for the seeded scorers.
#[derive(Debug, Clone, Copy)]
pub struct ScoreParams {
    pub seed: u64,
    pub fire: FireParams,
}

impl ScoreParams {
    pub fn new(seed: u64) -> Self {
        ScoreParams {
            seed,
            fire: FireParams::default(),
        }
    }
}

/// Runs the scorer selected by `method`.
pub fn score_method(g: &Graph, method: Method, params: &ScoreParams) -> EdgeScores {
    match method {
        Method::Random => score_random(g, params.seed),
        Method::Triangles => triangle_counts(g),
        Method::Jaccard => jaccard_scores(g),
        Method::LocalSimilarity => score_local_similarity(g),
        Method::LocalDegree => score_local_degree(g),
        Method::SimmelianTriadic => score_simmelian(g, SimmelianStrength::Triadic),
        Method::SimmelianQuadrilateral => score_simmelian(g, SimmelianStrength::Quadrilateral),
        Method::ForestFire => {
            let mut fire = params.fire;
            fire.seed = params.seed;
            score_edge_forest_fire(g, &fire)
        }
    }
}

/// Writes the score vector: a `# method=<tag> m=<count>` header, then one
/// `u v score` line per canonical edge.
pub fn write_scores<W: Write>(g: &Graph, scores: &EdgeScores, mut w: W) -> std::io::Result<()> {
    writeln!(w, "# method={} m={}", scores.method(), scores.len())?;
    for (&(u, v), &s) in g.edges().iter().zip(scores.values()) {
        writeln!(w, "{u} {v} {s}")?;
    }
    Ok(())
}

/// Reads a score file written by [`write_scores`] and checks it against the
/// graph it is applied to: edge count, endpoints and canonical order must
/// all match.
pub fn read_scores<R: BufRead>(g: &Graph, reader: R) -> Result<EdgeScores, ScoreError> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| ScoreError::Format("empty score file".into()))??;
    let header = header
        .strip_prefix("# ")
        .ok_or_else(|| ScoreError::Format("missing `# method=.. m=..` header".into()))?;
    let mut method = None;
    let mut m = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("method", v)) => method = Some(v.to_string()),
            Some(("m", v)) => {
                m = Some(v.parse::<usize>().map_err(|_| {
                    ScoreError::Format(format!("bad edge count `{v}` in header"))
                })?)
            }
            _ => return Err(ScoreError::Format(format!("bad header field `{field}`"))),
        }
    }
    let method = method.ok_or_else(|| ScoreError::Format("header missing method".into()))?;
    let m = m.ok_or_else(|| ScoreError::Format("header missing m".into()))?;
    if m != g.edge_count() {
        return Err(ScoreError::Format(format!(
            "score file has {m} edges but graph has {}",
            g.edge_count()
        )));
    }

    let mut values = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let mut parts = line.split_whitespace();
        let mut field = |what: &str| -> Result<&str, ScoreError> {
            parts
                .next()
                .ok_or_else(|| ScoreError::Format(format!("line {}: missing {what}", i + 2)))
        };
        let u: usize = field("source")?
            .parse()
            .map_err(|_| ScoreError::Format(format!("line {}: bad node id", i + 2)))?;
        let v: usize = field("target")?
            .parse()
            .map_err(|_| ScoreError::Format(format!("line {}: bad node id", i + 2)))?;
        let s: f64 = field("score")?
            .parse()
            .map_err(|_| ScoreError::Format(format!("line {}: bad score", i + 2)))?;
        if parts.next().is_some() {
            return Err(ScoreError::Format(format!("line {}: too many fields", i + 2)));
        }
        let expected = g.edges().get(values.len()).copied();
        if expected != Some((u, v)) {
            return Err(ScoreError::Format(format!(
                "line {}: edge ({u},{v}) does not match the graph's canonical edge list",
                i + 2
            )));
        }
        if !s.is_finite() {
            return Err(ScoreError::Format(format!("line {}: non-finite score", i + 2)));
        }
        values.push(s);
    }
    if values.len() != m {
        return Err(ScoreError::Format(format!(
            "header announced {m} edges, found {}",
            values.len()
        )));
    }
    Ok(EdgeScores::new(method, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn method_tags_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.tag().parse::<Method>().unwrap(), m);
        }
        assert!("nope".parse::<Method>().is_err());
    }

    #[test]
    fn score_file_round_trip() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let scores = EdgeScores::new("tri", vec![1.0, 0.5, 0.25]);
        let mut buf = Vec::new();
        write_scores(&g, &scores, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# method=tri m=3\n"));
        let back = read_scores(&g, Cursor::new(buf)).unwrap();
        assert_eq!(back, scores);
    }

    #[test]
    fn score_file_rejects_wrong_graph() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let scores = EdgeScores::new("tri", vec![1.0, 0.5, 0.25]);
        let mut buf = Vec::new();
        write_scores(&g, &scores, &mut buf).unwrap();

        let smaller = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(read_scores(&smaller, Cursor::new(buf.clone())).is_err());

        let other = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert!(read_scores(&other, Cursor::new(buf)).is_err());
    }
}
