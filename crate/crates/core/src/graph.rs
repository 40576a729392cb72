//! Simple undirected graphs, graph6 / edge-list parsing and validation.
//!
//! Vertices are `0..n`. Edges keep the index they were given at construction
//! time; every algorithm in the crate reports results in that indexing, even
//! when it reorders edges internally.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// Largest vertex count representable by the single-byte graph6 header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6: {msg} at byte offset {offset}")]
    Graph6 { offset: usize, msg: String },
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("not connected")]
    NotConnected,
    #[error("no edges")]
    NoEdges,
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge `i` of the result is `edges[i]`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            let idx = list.len();
            adj[u].push((v, idx));
            adj[v].push((u, idx));
            list.push((u, v));
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge index)` pairs incident to `x`, in insertion order.
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_order(0).len() == self.n
    }

    /// Vertices reachable from `root`, in BFS order.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// Edge indices ordered by a BFS over the line graph, starting at the
    /// first edge of a maximum-degree vertex. Every edge after the first of
    /// its component is adjacent to some earlier edge.
    pub fn line_bfs_edge_order(&self) -> Vec<usize> {
        let m = self.edges.len();
        let mut order = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        let mut roots: Vec<usize> = (0..self.n).filter(|&x| !self.adj[x].is_empty()).collect();
        roots.sort_by_key(|&x| std::cmp::Reverse(self.degree(x)));
        for root in roots {
            let Some(&(_, start)) = self.adj[root].first() else { continue };
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([(start, root)]);
            while let Some((e, hub)) = queue.pop_front() {
                order.push(e);
                let (u, v) = self.edges[e];
                let other = if hub == u { v } else { u };
                for x in [hub, other] {
                    for &(_, f) in &self.adj[x] {
                        if !seen[f] {
                            seen[f] = true;
                            queue.push_back((f, x));
                        }
                    }
                }
            }
        }
        order
    }

    /// Encodes the graph in the short graph6 form.
    pub fn to_graph6(&self) -> Option<String> {
        if self.n > GRAPH6_MAX_VERTICES {
            return None;
        }
        let mut out = vec![(self.n + 63) as u8];
        let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.edge_between(i, j).is_some());
            }
        }
        for chunk in bits.chunks(6) {
            let mut byte = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    byte |= 1 << (5 - k);
                }
            }
            out.push(byte + 63);
        }
        Some(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// A graph that passed [`validate`]: connected with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedGraph(Graph);

impl ConnectedGraph {
    pub fn into_inner(self) -> Graph {
        self.0
    }
}

impl Deref for ConnectedGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for ConnectedGraph {
    type Error = GraphError;

    fn try_from(g: Graph) -> Result<Self, GraphError> {
        validate(g)
    }
}

/// Accepts exactly the connected graphs with at least one edge.
pub fn validate(g: Graph) -> Result<ConnectedGraph, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    Ok(ConnectedGraph(g))
}

fn g6_err(offset: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, msg: msg.into() }
}

/// Decodes one graph6 record (short form, n <= 62).
///
/// An optional `>>graph6<<` header and surrounding whitespace are ignored.
/// Edge indices follow graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim();
    let (skip, body) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return Err(g6_err(skip, "empty record"));
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(skip + i, format!("byte {b} outside 63..126")));
        }
    }
    if first == 126 {
        return Err(g6_err(skip, format!("only n <= {GRAPH6_MAX_VERTICES} is supported")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if body.len() < expected {
        return Err(g6_err(
            skip + body.len(),
            format!("record too short: n={n} needs {expected} bytes, found {}", body.len()),
        ));
    }
    if body.len() > expected {
        return Err(g6_err(skip + expected, "trailing garbage"));
    }
    let bit = |k: usize| {
        let byte = body[1 + k / 6] - 63;
        byte & (1 << (5 - k % 6)) != 0
    };
    for k in nbits..(expected - 1) * 6 {
        if bit(k) {
            return Err(g6_err(skip + 1 + k / 6, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Parses `u v` lines. Blank lines and `#` comments are skipped; `n` is one
/// more than the largest vertex id.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GraphError::EdgeList { line: line_no, msg };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(format!("expected \"u v\", found {} tokens", tokens.len())));
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(format!("{tok:?} is not a nonnegative integer")))?;
        }
        let [u, v] = ids;
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {u}-{v}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_records() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.vertex_count(), k2.edges()), (2, &[(0, 1)][..]));

        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("B") {
            Err(GraphError::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("Bww") {
            Err(GraphError::Graph6 { offset: 2, msg }) => assert!(msg.contains("trailing")),
            other => panic!("{other:?}"),
        }
        match parse_graph6("B w") {
            Err(GraphError::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("~??@").is_err());
        // padding bit set
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn graph6_header_and_encoder() {
        let g = parse_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.to_graph6().unwrap(), "Bw");
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn edge_list_parsing() {
        let k2 = parse_edge_list("0 1").unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p3 = parse_edge_list("# path\n0 1\n\n1 2 # tail\n").unwrap();
        assert_eq!((p3.vertex_count(), p3.edges()), (3, &[(0, 1), (1, 2)][..]));

        assert!(matches!(
            parse_edge_list("0 1\n0 1"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 0"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("3 3"), Err(GraphError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(GraphError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(GraphError::EdgeList { line: 1, .. })));
    }

    #[test]
    fn validation() {
        assert!(validate(parse_graph6("A_").unwrap()).is_ok());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(validate(two_edges).unwrap_err().to_string(), "not connected");
        let lonely = Graph::new(1, []).unwrap();
        assert_eq!(validate(lonely).unwrap_err().to_string(), "no edges");
    }

    #[test]
    fn line_bfs_order_is_a_permutation_with_adjacent_prefixes() {
        let g = parse_graph6("DQc").unwrap();
        let g = Graph::new(g.vertex_count(), g.edges().iter().copied().chain([(2, 3)])).unwrap();
        let order = g.line_bfs_edge_order();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted, (0..g.edge_count()).collect::<Vec<_>>());
        // starts at a maximum degree vertex
        let (u, v) = g.edge(order[0]);
        assert!(g.degree(u) == g.max_degree() || g.degree(v) == g.max_degree());
    }
}
