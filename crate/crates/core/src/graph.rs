//! Simple directed graphs, the derived views the connectivity predicates need,
//! and the plain-text graph format.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{GraphError, ParseError};

/// Dense zero-based vertex index, valid relative to a graph's `n`.
pub type VertexId = usize;

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Edge { tail, head }
    }

    pub fn reversed(self) -> Self {
        Edge::new(self.head, self.tail)
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((tail, head): (VertexId, VertexId)) -> Self {
        Edge::new(tail, head)
    }
}

/// Immutable simple directed graph.
///
/// Edges keep the order they were supplied in (the canonical order); every
/// algorithm in the crate scans edges in that order. Adjacency entries carry
/// the index of the edge they came from so that edge-masked views can be
/// evaluated without rebuilding the graph.
#[derive(Clone, Debug)]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(VertexId, usize)>>,
    in_adj: Vec<Vec<(VertexId, usize)>>,
}

impl PartialEq for DiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for DiGraph {}

impl DiGraph {
    /// Builds a graph on `n` vertices, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn build<I, E>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for e in edge_list {
            let e = e.into();
            if e.tail >= n || e.head >= n {
                return Err(GraphError::OutOfRange { edge: e, n });
            }
            if e.tail == e.head {
                return Err(GraphError::SelfLoop(e));
            }
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            edges.push(e);
        }
        Ok(Self::from_valid_edges(n, edges))
    }

    /// Caller guarantees the edge list already satisfies the graph invariants.
    pub(crate) fn from_valid_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_adj[e.tail].push((e.head, i));
            in_adj[e.head].push((e.tail, i));
        }
        DiGraph {
            n,
            edges,
            out_adj,
            in_adj,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_adj[v].iter().map(|&(w, _)| w)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_adj[v].iter().map(|&(w, _)| w)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub(crate) fn out_arcs(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.out_adj[v]
    }

    pub(crate) fn in_arcs(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.in_adj[v]
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edge_index(e).is_some()
    }

    /// Position of `e` in canonical order.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if e.tail >= self.n {
            return None;
        }
        self.out_adj[e.tail]
            .iter()
            .find(|&&(w, _)| w == e.head)
            .map(|&(_, i)| i)
    }

    /// The graph without `e`; remaining edges keep their relative order.
    pub fn delete_edge(&self, e: Edge) -> Result<DiGraph, GraphError> {
        let idx = self.edge_index(e).ok_or(GraphError::EdgeNotPresent(e))?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &e)| e)
            .collect();
        Ok(Self::from_valid_edges(self.n, edges))
    }

    /// Removes `v` and its incident edges, relabelling the survivors densely.
    ///
    /// The returned mapping sends each old id to its new id (`None` for `v`).
    pub fn delete_vertex(
        &self,
        v: VertexId,
    ) -> Result<(DiGraph, Vec<Option<VertexId>>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if self.n < 2 {
            return Err(GraphError::Empty);
        }
        let mapping: Vec<Option<VertexId>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.touches(v))
            .map(|e| Edge::new(mapping[e.tail].unwrap(), mapping[e.head].unwrap()))
            .collect();
        Ok((Self::from_valid_edges(self.n - 1, edges), mapping))
    }

    /// Same vertices, every edge flipped; canonical order is preserved.
    pub fn reverse(&self) -> DiGraph {
        Self::from_valid_edges(self.n, self.edges.iter().map(|e| e.reversed()).collect())
    }

    /// The graph with `e` appended at the end of the canonical order.
    pub fn add_edge(&self, e: Edge) -> Result<DiGraph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push(e);
        DiGraph::build(self.n, edges)
    }

    /// Spanning subgraph keeping the edges whose mask entry is set.
    pub(crate) fn masked(&self, alive: &[bool]) -> DiGraph {
        let edges = self
            .edges
            .iter()
            .zip(alive)
            .filter(|&(_, &keep)| keep)
            .map(|(&e, _)| e)
            .collect();
        Self::from_valid_edges(self.n, edges)
    }

    /// True when every edge of `self` is an edge of `other` and both have the
    /// same vertex count.
    pub fn is_spanning_subgraph_of(&self, other: &DiGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&e| other.contains_edge(e))
    }

    pub fn underlying(&self) -> UGraphView {
        UGraphView::from_digraph(self)
    }

    /// Parses the text format: optional `#` comment lines, a `n m` header,
    /// then exactly `m` lines of `u v`.
    pub fn parse(text: &str) -> Result<DiGraph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let (n, m) = parse_pair(header).ok_or_else(|| ParseError::Malformed {
            line: header_line,
            content: header.to_string(),
        })?;

        let mut seen = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, content) in lines {
            last_line = line;
            if content.is_empty() && edges.len() == m {
                continue;
            }
            let (u, v) = parse_pair(content).ok_or_else(|| ParseError::Malformed {
                line,
                content: content.to_string(),
            })?;
            if edges.len() == m {
                return Err(ParseError::EdgeCountMismatch {
                    declared: m,
                    found: m + 1,
                    line,
                });
            }
            let e = Edge::new(u, v);
            let invalid = if n == 0 {
                Some(GraphError::Empty)
            } else if u >= n || v >= n {
                Some(GraphError::OutOfRange { edge: e, n })
            } else if u == v {
                Some(GraphError::SelfLoop(e))
            } else if !seen.insert(e) {
                Some(GraphError::DuplicateEdge(e))
            } else {
                None
            };
            if let Some(source) = invalid {
                return Err(ParseError::Invalid { line, source });
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
                line: last_line,
            });
        }
        if n == 0 {
            return Err(ParseError::Invalid {
                line: header_line,
                source: GraphError::Empty,
            });
        }
        Ok(Self::from_valid_edges(n, edges))
    }

    /// Canonical text form: header then one edge per line, no comments.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.tail, e.head));
        }
        out
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let (a, b) = line.split_once(' ')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// Underlying undirected graph: directions forgotten, antiparallel pairs merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UGraphView {
    n: usize,
    adj: Vec<Vec<VertexId>>,
}

impl UGraphView {
    pub fn from_digraph(g: &DiGraph) -> Self {
        Self::from_pairs(g.n(), g.edges().iter().map(|e| (e.tail, e.head)))
    }

    /// Builds from arbitrary vertex pairs; self-pairs are ignored, repeats merged.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        UGraphView { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_pair(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Unordered pairs as `(min, max)`.
    pub fn pairs(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}
