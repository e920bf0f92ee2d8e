//! Pattern graphs and hypergraphs on dense vertex ids `0..n`.
//!
//! Edges are stored as ascending vertex lists. A [`Hypergraph`] keeps its
//! edges in insertion order (so witnesses can refer to edges by index) but
//! compares as an unordered family of sets.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::combin::KSubsets;
use crate::error::{Error, Result};

/// A simple undirected pattern graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    /// Edges are canonicalized to `(min, max)` and sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {{{a},{b}}} out of range for {n} vertices"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge {{{},{}}}",
                    e.0, e.1
                )));
            }
            out.push(e);
        }
        out.sort_unstable();
        Ok(Graph { n, edges: out })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Drops isolated vertices. Returns the compacted graph and, for each new
    /// id, the id it had before.
    pub fn normalized(&self) -> (Graph, Vec<usize>) {
        let deg = self.degrees();
        let kept: Vec<usize> = (0..self.n).filter(|&v| deg[v] > 0).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        (
            Graph {
                n: kept.len(),
                edges,
            },
            kept,
        )
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        edges.sort_unstable();
        Graph {
            n: vertices.len(),
            edges,
        }
    }

    /// Parses the edge-list format and normalizes away isolated vertices.
    pub fn parse(text: &str) -> Result<Graph> {
        Self::parse_with_ids(text).map(|(g, _)| g)
    }

    /// Like [`Graph::parse`], also returning the file id of every vertex.
    pub fn parse_with_ids(text: &str) -> Result<(Graph, Vec<usize>)> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        let mut n = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let ids = parse_ids(line, line_no)?;
            if ids.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two vertex ids, found {}", ids.len()),
                });
            }
            let (a, b) = (ids[0], ids[1]);
            if a == b {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("self-loop at vertex {a}"),
                });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate edge {{{},{}}}", e.0, e.1),
                });
            }
            n = n.max(e.1 + 1);
            edges.push(e);
        }
        edges.sort_unstable();
        Ok(Graph { n, edges }.normalized())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }
}

fn parse_ids(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_ascii_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid vertex id {tok:?}"),
            })
        })
        .collect()
}

/// A hypergraph whose edges are distinct vertex sets of size at least two.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut h = Hypergraph::empty(n);
        let mut seen = HashSet::new();
        for e in edges {
            let e = canonical_edge(n, e)?;
            if !seen.insert(e.clone()) {
                return Err(Error::EdgeExists(e));
            }
            h.edges.push(e);
        }
        Ok(h)
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Index of the edge equal to `e` (as a set), if present.
    pub fn find_edge(&self, e: &[usize]) -> Option<usize> {
        let mut sorted = e.to_vec();
        sorted.sort_unstable();
        self.edges.iter().position(|x| *x == sorted)
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        self.find_edge(e).is_some()
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// The k-uniform complement: every k-subset of `0..n` that is not an
    /// edge, in lexicographic order.
    pub fn missing_edges(&self, k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let present: HashSet<&[usize]> = self
            .edges
            .iter()
            .filter(|e| e.len() == k)
            .map(|e| e.as_slice())
            .collect();
        KSubsets::all(self.n, k).filter(move |s| !present.contains(s.as_slice()))
    }

    /// True iff every edge containing `v` also contains `u` (`v ⪯ u`).
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .all(|e| e.binary_search(&u).is_ok())
    }

    /// `H + e` as a new hypergraph.
    pub fn add_edge(&self, e: &[usize]) -> Result<Hypergraph> {
        let e = canonical_edge(self.n, e.to_vec())?;
        if self.edges.contains(&e) {
            return Err(Error::EdgeExists(e));
        }
        let mut h = self.clone();
        h.edges.push(e);
        Ok(h)
    }

    /// Parses the hypergraph file format. An `n <count>` header fixes the
    /// vertex count; otherwise it is one more than the largest id.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut declared: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('n') {
                if declared.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "repeated vertex-count header".into(),
                    });
                }
                let count = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid header {line:?}"),
                })?;
                declared = Some((count, line_no));
                continue;
            }
            let mut ids = parse_ids(line, line_no)?;
            ids.sort_unstable();
            if ids.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "repeated vertex inside an edge".into(),
                });
            }
            if ids.len() < 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("edge of size {} (need at least 2)", ids.len()),
                });
            }
            if let Some(first) = seen.insert(ids.clone(), line_no) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate edge {ids:?} (first on line {first})"),
                });
            }
            edges.push((line_no, ids));
        }
        let max_id = edges.iter().filter_map(|(_, e)| e.last().copied()).max();
        let n = match declared {
            Some((count, line)) => {
                if let Some((bad_line, _)) = edges.iter().find(|(_, e)| *e.last().unwrap() >= count)
                {
                    return Err(Error::Parse {
                        line: *bad_line,
                        msg: format!(
                            "vertex id out of range for header on line {line} (n {count})"
                        ),
                    });
                }
                count
            }
            None => max_id.map_or(0, |m| m + 1),
        };
        Ok(Hypergraph {
            n,
            edges: edges.into_iter().map(|(_, e)| e).collect(),
        })
    }

    /// Serializes with an `n` header and one ascending edge per line, in
    /// stored edge order.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for e in &self.edges {
            s.push_str(&format_set(e, " "));
            s.push('\n');
        }
        s
    }
}

fn canonical_edge(n: usize, mut e: Vec<usize>) -> Result<Vec<usize>> {
    e.sort_unstable();
    let dup = e.windows(2).any(|w| w[0] == w[1]);
    if e.len() < 2 || dup || e.last().is_some_and(|&v| v >= n) {
        return Err(Error::InvalidEdge(e));
    }
    Ok(e)
}

pub(crate) fn format_set(e: &[usize], sep: &str) -> String {
    e.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Parses a comma-separated vertex list such as `0,3,7`.
pub fn parse_csv(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("invalid vertex id {t:?}")))
        })
        .collect()
}
