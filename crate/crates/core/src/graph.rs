//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Derived graphs (vertex deletion,
//! edge insertion, induced subgraphs) are returned as new values.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so that the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges,
        }
    }
}

/// Two vertices whose removal disconnects a connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeparationPair {
    pub u: usize,
    pub v: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push(edge(u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle `0..n` together with every chord joining vertices two
    /// steps apart.
    pub fn complete_two_hop(n: usize) -> Self {
        assert!(n >= 4, "complete 2-hop graphs need at least four vertices");
        let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
        Graph::new(n, edges).expect("2-hop edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each with its smaller endpoint first.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Unordered vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep).0
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given
    /// order. Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let g = Graph::new(vertices.len(), edges).expect("induced edges are valid");
        (g, vertices.to_vec())
    }

    /// Connectivity of the graph with the vertices in `removed` deleted.
    /// A graph with no remaining vertices counts as connected.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let mut dead = vec![false; self.n];
        for &r in removed {
            dead[r] = true;
        }
        let Some(start) = (0..self.n).find(|&v| !dead[v]) else {
            return true;
        };
        let alive = self.n - dead.iter().filter(|&&d| d).count();
        let mut seen = dead;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == alive
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Cut vertices in increasing order (iterative low-link DFS).
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (x, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[x].len() {
                    let y = self.adj[x][*idx];
                    *idx += 1;
                    if disc[y] == usize::MAX {
                        disc[y] = time;
                        low[y] = time;
                        time += 1;
                        if x == root {
                            root_children += 1;
                        }
                        stack.push((y, x, 0));
                    } else if y != parent {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if parent != root && low[x] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// All separation pairs, found by deleting every vertex pair.
    pub fn separation_pairs(&self) -> Vec<SeparationPair> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.n > 3 && !self.is_connected_without(&[u, v]) {
                    out.push(SeparationPair { u, v });
                }
            }
        }
        out
    }

    /// At least four vertices, biconnected, and no separation pair.
    pub fn is_triconnected(&self) -> bool {
        if self.n < 4 || !self.is_biconnected() {
            return false;
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.is_connected_without(&[u, v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices of degree exactly three whose neighbours are pairwise
    /// adjacent, in increasing id order.
    pub fn degree3_k4_vertices(&self) -> Vec<(usize, [usize; 3])> {
        (0..self.n)
            .filter_map(|v| self.k4_neighbors(v).map(|nb| (v, nb)))
            .collect()
    }

    /// The three neighbours of `v` when `v` has degree three and closes a K4.
    pub fn k4_neighbors(&self, v: usize) -> Option<[usize; 3]> {
        match self.adj[v][..] {
            [a, b, c] if self.has_edge(a, b) && self.has_edge(a, c) && self.has_edge(b, c) => {
                Some([a, b, c])
            }
            _ => None,
        }
    }

    /// Serializes in the `n m` header + `u v` lines edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two integers, found {} fields", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("not a non-negative integer: {s:?}"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    for id in [a, b] {
                        if id >= n {
                            return Err(Error::Parse {
                                line: line_no,
                                msg: format!("vertex {id} out of range 0..{n}"),
                            });
                        }
                    }
                    if a == b {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("self-loop at {a}"),
                        });
                    }
                    pairs.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if pairs.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {m} edges but {} were listed", pairs.len()),
            });
        }
        Graph::new(n, pairs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_minus_13() -> Graph {
        let edges = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .filter(|&e| e != (1, 3));
        Graph::new(5, edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        assert_eq!(Graph::complete(5).m(), 10);
        let c4 = Graph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.m(), 4);
        assert_eq!(c4, Graph::cycle(4));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn biconnectivity() {
        assert!(Graph::cycle(4).is_biconnected());
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!bowtie.is_biconnected());
        assert_eq!(bowtie.cut_vertices(), vec![2]);
        assert!(Graph::complete(5).is_biconnected());
        assert!(!Graph::complete(2).is_biconnected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_biconnected());
    }

    #[test]
    fn triconnectivity() {
        assert!(Graph::complete(4).is_triconnected());
        assert!(!Graph::cycle(5).is_triconnected());
        assert!(k5_minus_13().is_triconnected());
        assert!(!Graph::complete(3).is_triconnected());
        assert_eq!(Graph::cycle(4).separation_pairs().len(), 2);
    }

    #[test]
    fn degree3_k4() {
        let k4: Vec<usize> = Graph::complete(4)
            .degree3_k4_vertices()
            .iter()
            .map(|x| x.0)
            .collect();
        assert_eq!(k4, vec![0, 1, 2, 3]);
        assert!(Graph::complete(5).degree3_k4_vertices().is_empty());
        let found = k5_minus_13().degree3_k4_vertices();
        assert_eq!(found, vec![(1, [0, 2, 4]), (3, [0, 2, 4])]);
    }

    #[test]
    fn removing_k4_vertex_keeps_triconnectivity() {
        // K5 minus {1,3} plus a sixth vertex on the triangle {0,2,4}.
        let g = Graph::new(
            6,
            k5_minus_13()
                .edges()
                .iter()
                .copied()
                .chain([(5, 0), (5, 2), (5, 4)]),
        )
        .unwrap();
        assert!(g.is_triconnected());
        for (v, _) in g.degree3_k4_vertices() {
            assert!(g.without_vertex(v).is_triconnected(), "removing {v}");
        }
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("# triangle\n3 3\n0 1\n1 2 # comment\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        match Graph::parse_edge_list("3 1\na b c\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn serde_roundtrip() {
        let g = Graph::complete_two_hop(7);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
