//! Simple undirected graphs, the edge-list text format, and set queries
//! (neighbor counts, induced forests, residual maximum degree).

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::union_find::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: unexpected token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Panics on self-loops, duplicates or
    /// out-of-range ids; use [`parse_edge_list`] for untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            assert_ne!(u, v, "self-loop on {u}");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            assert_eq!(before, list.len(), "duplicate edge");
        }
        Graph { adj, m: edges.len() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Maximum degree of the whole graph (0 for the empty graph).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of neighbors of `v` inside `s`.
    pub fn neighbors_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&u| s.contains(u)).count()
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].iter().filter(|&&u| u > v && s.contains(u)).count())
            .sum()
    }

    /// Whether the subgraph induced by `s` is acyclic (union-find over inner edges).
    pub fn induces_forest(&self, s: &VertexSet) -> bool {
        let mut uf = UnionFind::new(self.n());
        for v in s.iter() {
            for &u in &self.adj[v] {
                if u > v && s.contains(u) && !uf.union(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Same question as [`Graph::induces_forest`], answered by depth-first
    /// search looking for a non-tree edge.
    pub fn induces_forest_dfs(&self, s: &VertexSet) -> bool {
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        for root in s.iter() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !s.contains(u) || u == parent[v] {
                        continue;
                    }
                    if seen[u] {
                        return false;
                    }
                    seen[u] = true;
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        true
    }

    /// Maximum degree of `G - excluded`, degrees counted inside the remaining
    /// subgraph.
    pub fn max_degree_excluding(&self, excluded: &VertexSet) -> usize {
        (0..self.n())
            .filter(|&v| !excluded.contains(v))
            .map(|v| self.adj[v].iter().filter(|&&u| !excluded.contains(u)).count())
            .max()
            .unwrap_or(0)
    }

    /// Subgraph induced by `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut m = 0;
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect();
                list.sort_unstable();
                m += list.len();
                list
            })
            .collect();
        Graph { adj, m: m / 2 }
    }
}

/// Vertex subset over a fixed universe `0..n`: membership mask plus member list.
#[derive(Debug, Clone, Default)]
pub struct VertexSet {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            mask: vec![false; n],
            members: Vec::new(),
        }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) -> bool {
        if self.mask[v] {
            return false;
        }
        self.mask[v] = true;
        self.members.push(v);
        true
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

/// Parses the edge-list format: optional `v <n>` header, then `<u> <v>` per
/// line; `#` lines and blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut seen_edge = false;
    let mut edges = Vec::new();
    let mut dedup = HashSet::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == "v" {
            if seen_edge || declared.is_some() || tokens.len() != 2 {
                return Err(ParseError::BadToken {
                    line,
                    token: trimmed.to_string(),
                });
            }
            declared = Some(parse_id(tokens[1], line)?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(ParseError::BadToken {
                line,
                token: trimmed.to_string(),
            });
        }
        let u = parse_id(tokens[0], line)?;
        let v = parse_id(tokens[1], line)?;
        if let Some(n) = declared {
            for x in [u, v] {
                if x >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                }
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !dedup.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        seen_edge = true;
        max_id = Some(max_id.map_or(u.max(v), |x| x.max(u).max(v)));
        edges.push((u, v));
    }

    let n = declared.unwrap_or_else(|| max_id.map_or(0, |x| x + 1));
    Ok(Graph::from_edges(n, &edges))
}

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::BadToken {
            line,
            token: token.to_string(),
        });
    }
    token.parse().map_err(|_| ParseError::BadToken {
        line,
        token: token.to_string(),
    })
}

/// Writes `g` in the edge-list format with a `v <n>` header.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn parses_path_with_header() {
        let g = parse_edge_list("v 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 0\n"),
            Err(ParseError::SelfLoop { line: 1, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge { line: 2, u: 1, v: 0 })
        );
        assert!(matches!(
            parse_edge_list("# c\n0 x\n"),
            Err(ParseError::BadToken { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("v 2\n0 2\n"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 2, n: 2 })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(ParseError::BadToken { line: 1, .. })
        ));
    }

    #[test]
    fn header_may_declare_isolated_vertices() {
        let g = parse_edge_list("# comment\nv 5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn neighbors_in_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.neighbors_in(0, &set(4, &[1, 3])), 2);
        assert_eq!(c4.neighbors_in(0, &set(4, &[])), 0);
        let k4 = complete(4);
        assert_eq!(k4.neighbors_in(0, &set(4, &[1, 2, 3])), 3);
    }

    #[test]
    fn induces_forest_examples() {
        let k3 = complete(3);
        assert!(!k3.induces_forest(&set(3, &[0, 1, 2])));
        assert!(!k3.induces_forest_dfs(&set(3, &[0, 1, 2])));
        assert!(k3.induces_forest(&set(3, &[1])));
        assert!(k3.induces_forest(&set(3, &[])));
        let c4 = cycle(4);
        assert!(c4.induces_forest(&set(4, &[0, 1, 2])));
        assert!(c4.induces_forest_dfs(&set(4, &[0, 1, 2])));
        assert!(!c4.induces_forest_dfs(&set(4, &[0, 1, 2, 3])));
    }

    #[test]
    fn max_degree_excluding_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.max_degree_excluding(&set(4, &[])), 2);
        // Removing one vertex leaves the path 1-2-3, whose middle vertex has degree 2.
        assert_eq!(c4.max_degree_excluding(&set(4, &[0])), 2);
        assert_eq!(c4.max_degree_excluding(&set(4, &[0, 2])), 0);
        assert_eq!(complete(4).max_degree_excluding(&set(4, &[0, 1])), 1);
        assert_eq!(c4.max_degree_excluding(&set(4, &[0, 1, 2, 3])), 0);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges() {
        let c4 = cycle(4);
        let h = c4.induced_subgraph(&[2, 0, 1]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(1, 2) && h.has_edge(0, 2));
        assert_eq!(c4.edges_within(&set(4, &[0, 1, 2])), 2);
    }

    #[test]
    fn write_then_parse_is_identity() {
        let g = complete(5);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
