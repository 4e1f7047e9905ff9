//! Immutable undirected simple-graph representation with a deterministic
//! canonical edge ordering, plus edge-list and METIS file I/O.

use std::io::{BufRead, Write};

use thiserror::Error;

/// Errors raised while reading graph files.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected two node tokens, found {found}")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: malformed METIS header")]
    BadHeader { line: usize },
    #[error("line {line}: neighbor id {id} outside 1..={n}")]
    NeighborOutOfRange { line: usize, id: usize, n: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// An immutable undirected simple graph over dense node ids `0..n`.
///
/// Edges are stored once in canonical form `(u, v)` with `u < v`, sorted
/// lexicographically. The position of an edge in that list is its canonical
/// edge id; every score vector in this crate is indexed by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    // adj_offsets[u]..adj_offsets[u+1] spans the canonical edges whose smaller
    // endpoint is u, enabling O(log d) edge-id lookup.
    adj_offsets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge iterator over dense node ids `< n`.
    /// Self-loops and duplicate edges are dropped silently.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        canon.sort_unstable();
        canon.dedup();
        for &(u, v) in &canon {
            assert!(u < n && v < n, "edge ({u},{v}) outside node range 0..{n}");
        }
        Self::from_canonical(n, canon)
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut adj_offsets = vec![0usize; n + 1];
        for &(u, _) in &edges {
            adj_offsets[u + 1] += 1;
        }
        for i in 0..n {
            adj_offsets[i + 1] += adj_offsets[i];
        }
        Graph {
            adj,
            edges,
            adj_offsets,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Neighbors of `u`, sorted ascending.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Canonical id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = (u.min(v), u.max(v));
        let span = &self.edges[self.adj_offsets[a]..self.adj_offsets[a + 1]];
        span.binary_search_by_key(&b, |&(_, y)| y)
            .ok()
            .map(|i| self.adj_offsets[a] + i)
    }

    /// Checks the structural invariants: symmetry, sorted adjacency, strictly
    /// increasing canonical edges, no loops, and degree sum `= 2m`.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.node_count();
        for w in self.edges.windows(2) {
            if w[0] >= w[1] {
                return Err(format!("edges not strictly increasing: {:?} {:?}", w[0], w[1]));
            }
        }
        for &(u, v) in &self.edges {
            if u >= v {
                return Err(format!("edge ({u},{v}) not canonical"));
            }
            if v >= n {
                return Err(format!("edge ({u},{v}) outside node range"));
            }
        }
        let mut degree_sum = 0usize;
        for u in 0..n {
            degree_sum += self.adj[u].len();
            for w in self.adj[u].windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("adjacency of {u} not strictly sorted"));
                }
            }
            for &v in &self.adj[u] {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(format!("asymmetric edge ({u},{v})"));
                }
            }
        }
        if degree_sum != 2 * self.edge_count() {
            return Err(format!(
                "degree sum {degree_sum} != 2m = {}",
                2 * self.edge_count()
            ));
        }
        Ok(())
    }
}

/// A graph loaded from a file, together with the original node labels and
/// counts of silently dropped input lines.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Original node token per dense id.
    pub labels: Vec<String>,
    pub dropped_duplicates: usize,
    pub dropped_self_loops: usize,
}

/// Reads a whitespace-separated edge list. Lines starting with `#` or `%`
/// and blank lines are skipped; every other line must hold exactly two node
/// tokens. Duplicate edges and self-loops are dropped and counted.
///
/// Node tokens are densified to ids `0..n` in sorted token order (numeric
/// when every token parses as an unsigned integer, lexicographic otherwise),
/// so the resulting graph does not depend on the order of input lines and
/// `load(write(g))` reproduces `g` whenever every node of `g` has an edge.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph, ParseError> {
    let mut raw_edges: Vec<(String, String)> = Vec::new();
    let mut tokens: Vec<String> = Vec::new();
    let mut dropped_self_loops = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            (a, b, c) => {
                let found = [a, b, c].iter().filter(|t| t.is_some()).count();
                return Err(ParseError::MalformedLine {
                    line: idx + 1,
                    found,
                });
            }
        };
        tokens.push(a.to_string());
        tokens.push(b.to_string());
        if a == b {
            dropped_self_loops += 1;
        } else {
            raw_edges.push((a.to_string(), b.to_string()));
        }
    }

    tokens.sort_unstable();
    tokens.dedup();
    if tokens.iter().all(|t| t.parse::<u64>().is_ok()) {
        tokens.sort_by_key(|t| t.parse::<u64>().unwrap());
    }
    let lookup: std::collections::HashMap<&str, usize> = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();

    let n = tokens.len();
    let mut canon: Vec<(usize, usize)> = raw_edges
        .iter()
        .map(|(a, b)| {
            let (u, v) = (lookup[a.as_str()], lookup[b.as_str()]);
            (u.min(v), u.max(v))
        })
        .collect();
    canon.sort_unstable();
    let before = canon.len();
    canon.dedup();
    let dropped_duplicates = before - canon.len();

    Ok(LoadedGraph {
        graph: Graph::from_canonical(n, canon),
        labels: tokens,
        dropped_duplicates,
        dropped_self_loops,
    })
}

/// Writes one `u v` line per canonical edge, in canonical order.
pub fn write_edge_list<W: Write>(g: &Graph, mut writer: W) -> std::io::Result<()> {
    for &(u, v) in g.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

/// Renders the edge list to a string; round-trips through
/// [`load_edge_list`] for any graph without isolated nodes.
pub fn edge_list_string(g: &Graph) -> String {
    let mut out = Vec::new();
    write_edge_list(g, &mut out).expect("in-memory write cannot fail");
    String::from_utf8(out).expect("edge list is ascii")
}

/// Reads the METIS adjacency format: a `n m` header line followed by one
/// line per node listing its 1-based neighbors. `%` lines are comments.
pub fn read_metis<R: BufRead>(reader: R) -> Result<LoadedGraph, ParseError> {
    let mut lines = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim().to_string();
        if trimmed.starts_with('%') {
            continue;
        }
        lines.push((idx + 1, trimmed));
    }
    let (&(header_line, ref header), body) = lines
        .split_first()
        .ok_or(ParseError::BadHeader { line: 1 })?;
    let header_tokens: Vec<&str> = header.split_whitespace().collect();
    if header_tokens.len() != 2 {
        return Err(ParseError::BadHeader { line: header_line });
    }
    let n: usize = header_tokens[0]
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line })?;
    let _m: usize = header_tokens[1]
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line })?;
    if body.len() != n {
        return Err(ParseError::BadHeader { line: header_line });
    }

    let mut edges = Vec::new();
    let mut dropped_self_loops = 0usize;
    for (u, &(line_no, ref line)) in body.iter().enumerate() {
        for token in line.split_whitespace() {
            let id: usize = token.parse().map_err(|_| ParseError::NeighborOutOfRange {
                line: line_no,
                id: 0,
                n,
            })?;
            if id < 1 || id > n {
                return Err(ParseError::NeighborOutOfRange { line: line_no, id, n });
            }
            let v = id - 1;
            if v == u {
                dropped_self_loops += 1;
            } else {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    // each undirected edge is listed from both endpoints
    let dropped_duplicates = (before - edges.len()).saturating_sub(edges.len());

    Ok(LoadedGraph {
        graph: Graph::from_canonical(n, edges),
        labels: (1..=n).map(|i| i.to_string()).collect(),
        dropped_duplicates,
        dropped_self_loops,
    })
}

/// Basic size statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub degrees: Vec<usize>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let degrees: Vec<usize> = (0..g.node_count()).map(|u| g.degree(u)).collect();
    GraphStats {
        nodes: g.node_count(),
        edges: g.edge_count(),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        degrees,
    }
}
