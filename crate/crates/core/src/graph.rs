//! Simple connected graphs, vertex sets and distance partitions.
//!
//! Vertices are dense `0..n` labels taken verbatim from the input. A [`Graph`]
//! is validated once at construction (no loops, no multi-edges, connected) and
//! immutable afterwards.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Edges are unordered pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let numbered: Vec<_> = edges.iter().map(|&(u, v)| (0, u, v)).collect();
        Self::build(n, &numbered)
    }

    // `line` is carried for error reporting only; 0 means "not from a file".
    fn build(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(line, u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge {
                    line,
                    u: key.0,
                    v: key.1,
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = Graph {
            n,
            edges: seen.into_iter().collect(),
            adjacency,
        };
        let components = graph.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(graph)
    }

    fn component_count(&self) -> usize {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `A·u` using the adjacency lists.
    pub fn adjacency_apply(&self, u: &[f64]) -> Result<Vec<f64>> {
        if u.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: u.len(),
            });
        }
        Ok(self
            .adjacency
            .iter()
            .map(|nbrs| nbrs.iter().map(|&j| u[j]).sum())
            .collect())
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_dense(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for &(u, v) in &self.edges {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    /// Single-source BFS distances.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Parses the edge-list text format: one `u v` pair per line, `#` comments,
/// blank lines ignored, optional `n <count>` header.
pub fn load_graph(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse = |tok: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("expected a non-negative vertex index, found `{tok}`"),
            })
        };
        match tokens.as_slice() {
            ["n", count] => {
                if declared_n.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        reason: "repeated `n` header".into(),
                    });
                }
                if !edges.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        reason: "`n` header must precede the edges".into(),
                    });
                }
                declared_n = Some(parse(count)?);
            }
            [u, v] => edges.push((line_no, parse(u)?, parse(v)?)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("expected `u v` or `n <count>`, found `{line}`"),
                })
            }
        }
    }
    let n = match declared_n {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    Graph::build(n, &edges)
}

/// Writes a graph back out in the edge-list format (with an `n` header).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Builds one of the named graph families.
pub fn generate(name: &str, params: &[usize]) -> Result<Graph> {
    let bad = |reason: &str| Error::ParamOutOfRange {
        family: name.to_string(),
        reason: reason.to_string(),
    };
    let one = |min: usize| -> Result<usize> {
        match params {
            [k] if *k >= min => Ok(*k),
            [_] => Err(bad(&format!("parameter must be at least {min}"))),
            _ => Err(bad("expected exactly one integer parameter")),
        }
    };
    match name {
        "cycle" => {
            let n = one(3)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        "path" => {
            let n = one(2)?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        "complete" => {
            let n = one(2)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        "hypercube" => {
            let k = one(1)?;
            if k > 16 {
                return Err(bad("dimension above 16 is not supported"));
            }
            let n = 1usize << k;
            let mut edges = Vec::new();
            for u in 0..n {
                for bit in 0..k {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        "petersen" => {
            if !params.is_empty() {
                return Err(bad("takes no parameters"));
            }
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &edges)
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Codewords of the cyclic [7,4] Hamming code with generator polynomial
/// `x^3 + x + 1`, as hypercube(7) labels: bit `j` of a label is the
/// coefficient of `x^j`.
pub fn hamming74_codewords() -> Vec<usize> {
    const GENERATOR: usize = 0b1011;
    let mut words: Vec<usize> = (0..16usize)
        .map(|message| {
            // carry-less product over GF(2)
            (0..4)
                .filter(|bit| message >> bit & 1 == 1)
                .fold(0, |acc, bit| acc ^ (GENERATOR << bit))
        })
        .collect();
    words.sort_unstable();
    words
}

/// A nonempty, sorted, duplicate-free set of vertices of a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = members.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(VertexSet { members })
    }

    pub fn all(n: usize) -> Result<Self> {
        Self::new(0..n, n)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Parses `"0,3,5"` style lists (whitespace tolerated).
    pub fn parse_list(text: &str, n: usize) -> Result<Self> {
        let mut members = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            members.push(tok.parse::<usize>().map_err(|_| Error::Parse {
                line: 0,
                reason: format!("bad vertex index `{tok}` in set"),
            })?);
        }
        Self::new(members, n)
    }

    /// Parses one index per line; blank lines and `#` comments ignored.
    pub fn parse_lines(text: &str, n: usize) -> Result<Self> {
        let mut members = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            members.push(line.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                reason: format!("bad vertex index `{line}`"),
            })?);
        }
        Self::new(members, n)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Subconstituents `C_0 = C, C_1, …, C_ε` of a vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct DistancePartition {
    layers: Vec<VertexSet>,
    distance: Vec<usize>,
}

impl DistancePartition {
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn layer(&self, k: usize) -> &VertexSet {
        &self.layers[k]
    }

    /// Covering radius of the set.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    /// The farthest layer `C_ε`.
    pub fn antipodal(&self) -> &VertexSet {
        self.layers
            .last()
            .expect("partition has at least one layer")
    }

    /// `∂(i, C)` for every vertex.
    pub fn distances(&self) -> &[usize] {
        &self.distance
    }
}

/// Multi-source breadth-first layering of the graph around `c`.
pub fn distance_partition(g: &Graph, c: &VertexSet) -> Result<DistancePartition> {
    if c.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.n();
    let mut distance = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = c.members().to_vec();
    for &v in &frontier {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        distance[v] = 0;
    }
    let mut layers = Vec::new();
    let mut depth = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if distance[v] == usize::MAX {
                    distance[v] = depth + 1;
                    next.push(v);
                }
            }
        }
        layers.push(VertexSet::new(frontier, n)?);
        frontier = next;
        depth += 1;
    }
    Ok(DistancePartition { layers, distance })
}
