//! SPQR-trees of biconnected graphs.
//!
//! Construction splits the graph at separation pairs found by brute force
//! (always the lexicographically least pair that admits a split), then
//! merges adjacent bonds and adjacent polygons. What remains are the
//! triconnected components: cycles (S), bonds (P) and 3-connected simple
//! graphs (R).
//!
//! Graph edges stay tagged [`EdgeTag::Real`] inside S- and R-skeletons.
//! The graph edge that belongs to a bond is split off into an explicit
//! Q-node leaf, and both the bond's copy and the Q-node's copy carry
//! [`EdgeTag::Q`]. Merging all skeletons therefore reconstructs the graph by
//! deleting every paired `Virtual` edge and every `Q` edge of a P-node.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeTag {
    /// A graph edge kept in place.
    Real,
    /// A graph edge held by the Q-node at the other end of this tree edge.
    Q(usize),
    /// One half of the virtual pair of this tree edge.
    Virtual(usize),
}

impl EdgeTag {
    pub fn is_real(self) -> bool {
        !matches!(self, EdgeTag::Virtual(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonEdge {
    pub u: usize,
    pub v: usize,
    pub tag: EdgeTag,
}

impl SkeletonEdge {
    pub fn endpoints(&self) -> Edge {
        edge(self.u, self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpqrNode {
    pub kind: NodeKind,
    /// Skeleton vertices (graph ids). For S-nodes in cycle order starting at
    /// the smallest id, otherwise sorted.
    pub vertices: Vec<usize>,
    pub edges: Vec<SkeletonEdge>,
}

impl SpqrNode {
    /// Number of skeleton edges, i.e. tree neighbours when every graph edge
    /// is counted as its own Q-node.
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// The skeleton as a simple graph on `0..k` (vertex `i` is
    /// `self.vertices[i]`). Parallel edges of P-nodes collapse.
    pub fn skeleton_graph(&self) -> Graph {
        let index: BTreeMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        Graph::new(
            self.vertices.len(),
            self.edges.iter().map(|e| (index[&e.u], index[&e.v])),
        )
        .expect("skeleton edges are valid")
    }

    pub fn virtual_edges(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| !e.tag.is_real())
            .map(|e| e.endpoints())
            .collect()
    }

    pub fn real_edges(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| e.tag.is_real())
            .map(|e| e.endpoints())
            .collect()
    }

    /// Whether the skeleton edge `{u, v}` is a graph edge that no other
    /// node is attached to.
    pub fn is_plain_real(&self, e: Edge) -> bool {
        self.edges
            .iter()
            .any(|s| s.endpoints() == e && s.tag == EdgeTag::Real)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    /// Endpoints shared by the two skeleton edges of this tree edge.
    pub pair: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpqrTree {
    pub n: usize,
    pub nodes: Vec<SpqrNode>,
    pub tree_edges: Vec<TreeEdge>,
}

/// Projection of one node for the characterization conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeView {
    pub node: usize,
    pub kind: NodeKind,
    pub neighbors: Vec<(usize, NodeKind)>,
    pub virtual_edges: Vec<Edge>,
    pub real_edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug)]
struct ArenaEdge {
    u: usize,
    v: usize,
    /// `None` for a graph edge, `Some(id)` for a virtual pair id.
    virt: Option<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn component_vertices(arena: &[ArenaEdge], comp: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = comp
        .iter()
        .flat_map(|&e| [arena[e].u, arena[e].v])
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Tries to split one component; returns the two halves on success.
fn split_once(
    arena: &mut Vec<ArenaEdge>,
    comp: &[usize],
    next_virtual: &mut usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    // Bundles of parallel edges are split off as bonds first.
    let mut groups: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for &e in comp {
        groups
            .entry(edge(arena[e].u, arena[e].v))
            .or_default()
            .push(e);
    }
    if groups.len() > 1 {
        if let Some((&(a, b), bundle)) = groups.iter().find(|(_, list)| list.len() >= 2) {
            let id = *next_virtual;
            *next_virtual += 1;
            let ve1 = arena.len();
            arena.push(ArenaEdge {
                u: a,
                v: b,
                virt: Some(id),
            });
            let ve2 = arena.len();
            arena.push(ArenaEdge {
                u: a,
                v: b,
                virt: Some(id),
            });
            let mut bond = bundle.clone();
            bond.push(ve1);
            let mut rest: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|e| !bundle.contains(e))
                .collect();
            rest.push(ve2);
            return Some((bond, rest));
        }
    } else {
        return None;
    }

    let vertices = component_vertices(arena, comp);
    if vertices.len() <= 3 {
        return None;
    }
    let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in comp {
        incident.entry(arena[e].u).or_default().push(e);
        incident.entry(arena[e].v).or_default().push(e);
    }
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let mut uf = UnionFind::new(comp.len());
            for (&x, list) in &incident {
                if x == a || x == b {
                    continue;
                }
                for w in list.windows(2) {
                    uf.union(local[&w[0]], local[&w[1]]);
                }
            }
            let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &e in comp {
                let r = uf.find(local[&e]);
                classes.entry(r).or_default().push(e);
            }
            let big: Vec<&Vec<usize>> = classes.values().filter(|c| c.len() >= 2).collect();
            if big.len() < 2 {
                continue;
            }
            let first = big[0].clone();
            let id = *next_virtual;
            *next_virtual += 1;
            let ve1 = arena.len();
            arena.push(ArenaEdge {
                u: a,
                v: b,
                virt: Some(id),
            });
            let ve2 = arena.len();
            arena.push(ArenaEdge {
                u: a,
                v: b,
                virt: Some(id),
            });
            let mut left = first.clone();
            left.push(ve1);
            let mut right: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|e| !first.contains(e))
                .collect();
            right.push(ve2);
            return Some((left, right));
        }
    }
    None
}

fn classify_component(arena: &[ArenaEdge], comp: &[usize]) -> NodeKind {
    let vs = component_vertices(arena, comp);
    if vs.len() == 2 {
        NodeKind::P
    } else if vs.len() == 3 && comp.len() == 3 {
        NodeKind::S
    } else {
        NodeKind::R
    }
}

/// Orders the vertices of a cycle skeleton along the cycle, starting at the
/// smallest id and continuing towards its smaller neighbour.
fn cycle_order(edges: &[SkeletonEdge]) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.u).or_default().push(e.v);
        adj.entry(e.v).or_default().push(e.u);
    }
    let start = *adj.keys().next().expect("non-empty cycle");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start]
        .iter()
        .min()
        .expect("cycle vertex has neighbours");
    while cur != start {
        order.push(cur);
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&x| x != prev)
            .expect("cycle continues");
        prev = cur;
        cur = next;
    }
    order
}

/// Builds the SPQR-tree of a biconnected graph.
pub fn build_spqr(g: &Graph) -> Result<SpqrTree> {
    if g.n() < 3 {
        return Err(Error::Structural(format!(
            "graph with {} vertices is not biconnected",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Structural("graph is disconnected".into()));
    }
    if let Some(&c) = g.cut_vertices().first() {
        return Err(Error::Structural(format!("vertex {c} is a cut vertex")));
    }

    let mut arena: Vec<ArenaEdge> = g
        .edges()
        .iter()
        .map(|&(u, v)| ArenaEdge { u, v, virt: None })
        .collect();
    let mut next_virtual = 0;
    let mut work = vec![(0..arena.len()).collect::<Vec<_>>()];
    let mut done: Vec<Vec<usize>> = Vec::new();
    while let Some(comp) = work.pop() {
        match split_once(&mut arena, &comp, &mut next_virtual) {
            Some((a, b)) => {
                work.push(b);
                work.push(a);
            }
            None => done.push(comp),
        }
    }

    // Merge bonds with bonds and polygons with polygons across shared
    // virtual pairs.
    let kinds: Vec<NodeKind> = done.iter().map(|c| classify_component(&arena, c)).collect();
    let mut owner: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (ci, comp) in done.iter().enumerate() {
        for &e in comp {
            if let Some(id) = arena[e].virt {
                owner.entry(id).or_default().push(ci);
            }
        }
    }
    let mut uf = UnionFind::new(done.len());
    let mut merged_pairs = std::collections::BTreeSet::new();
    for (&id, comps) in &owner {
        debug_assert_eq!(comps.len(), 2);
        let (x, y) = (comps[0], comps[1]);
        if kinds[x] == kinds[y] && matches!(kinds[x], NodeKind::S | NodeKind::P) {
            uf.union(x, y);
            merged_pairs.insert(id);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ci in 0..done.len() {
        groups.entry(uf.find(ci)).or_default().push(ci);
    }

    struct Proto {
        kind: NodeKind,
        edges: Vec<usize>,
    }
    let mut protos: Vec<Proto> = groups
        .values()
        .map(|members| {
            let edges: Vec<usize> = members
                .iter()
                .flat_map(|&ci| done[ci].iter().copied())
                .filter(|&e| arena[e].virt.is_none_or(|id| !merged_pairs.contains(&id)))
                .collect();
            Proto {
                kind: kinds[members[0]],
                edges,
            }
        })
        .collect();

    // Split the graph edge of each bond off into a Q-node.
    const Q_MARK: usize = usize::MAX;
    let mut q_links: Vec<(usize, usize)> = Vec::new(); // (bond proto, q proto)
    let bond_count = protos.len();
    for pi in 0..bond_count {
        if protos[pi].kind != NodeKind::P {
            continue;
        }
        if let Some(&real) = protos[pi].edges.iter().find(|&&e| arena[e].virt.is_none()) {
            let qi = protos.len();
            protos.push(Proto {
                kind: NodeKind::Q,
                edges: vec![real],
            });
            q_links.push((pi, qi));
        }
    }
    let _ = Q_MARK;

    // Deterministic node order: by vertex set, then kind.
    let mut keyed: Vec<(Vec<usize>, NodeKind, usize)> = protos
        .iter()
        .enumerate()
        .map(|(i, p)| (component_vertices(&arena, &p.edges), p.kind, i))
        .collect();
    keyed.sort();
    let mut new_index = vec![0; protos.len()];
    for (ni, (_, _, pi)) in keyed.iter().enumerate() {
        new_index[*pi] = ni;
    }

    // Tree edges: surviving virtual pairs and Q links.
    let mut raw_tree: Vec<(usize, usize, Edge, Option<usize>)> = Vec::new(); // (a, b, pair, virtual id)
    let mut pair_nodes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (pi, p) in protos.iter().enumerate() {
        if p.kind == NodeKind::Q {
            continue;
        }
        for &e in &p.edges {
            if let Some(id) = arena[e].virt {
                pair_nodes.entry(id).or_default().push(new_index[pi]);
            }
        }
    }
    for (&id, nodes) in &pair_nodes {
        let (a, b) = (nodes[0].min(nodes[1]), nodes[0].max(nodes[1]));
        let e = arena
            .iter()
            .find(|x| x.virt == Some(id))
            .expect("virtual edge exists");
        raw_tree.push((a, b, edge(e.u, e.v), Some(id)));
    }
    for &(pi, qi) in &q_links {
        let real = protos[qi].edges[0];
        let (a, b) = (new_index[pi], new_index[qi]);
        raw_tree.push((a.min(b), a.max(b), edge(arena[real].u, arena[real].v), None));
    }
    raw_tree.sort();
    let mut virt_to_tree: BTreeMap<usize, usize> = BTreeMap::new();
    let mut q_tree: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let tree_edges: Vec<TreeEdge> = raw_tree
        .iter()
        .enumerate()
        .map(|(ti, &(a, b, pair, virt))| {
            match virt {
                Some(id) => {
                    virt_to_tree.insert(id, ti);
                }
                None => {
                    q_tree.insert((a, b), ti);
                }
            }
            TreeEdge { a, b, pair }
        })
        .collect();
    let q_of_bond: BTreeMap<usize, usize> = q_links
        .iter()
        .map(|&(pi, qi)| {
            let (a, b) = (new_index[pi], new_index[qi]);
            (pi, q_tree[&(a.min(b), a.max(b))])
        })
        .chain(q_links.iter().map(|&(pi, qi)| {
            let (a, b) = (new_index[pi], new_index[qi]);
            (qi, q_tree[&(a.min(b), a.max(b))])
        }))
        .collect();

    let mut nodes: Vec<SpqrNode> = keyed
        .iter()
        .map(|(vertices, kind, pi)| {
            let mut edges: Vec<SkeletonEdge> = protos[*pi]
                .edges
                .iter()
                .map(|&e| {
                    let (u, v) = edge(arena[e].u, arena[e].v);
                    let tag = match arena[e].virt {
                        Some(id) => EdgeTag::Virtual(virt_to_tree[&id]),
                        None if matches!(kind, NodeKind::P | NodeKind::Q) => {
                            EdgeTag::Q(q_of_bond[pi])
                        }
                        None => EdgeTag::Real,
                    };
                    SkeletonEdge { u, v, tag }
                })
                .collect();
            edges.sort_by_key(|e| (e.endpoints(), e.tag));
            let vertices = if *kind == NodeKind::S {
                cycle_order(&edges)
            } else {
                vertices.clone()
            };
            SpqrNode {
                kind: *kind,
                vertices,
                edges,
            }
        })
        .collect();
    nodes.shrink_to_fit();
    Ok(SpqrTree {
        n: g.n(),
        nodes,
        tree_edges,
    })
}

impl SpqrTree {
    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .tree_edges
            .iter()
            .filter_map(|t| {
                if t.a == node {
                    Some(t.b)
                } else if t.b == node {
                    Some(t.a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The node on the other side of tree edge `te` from `node`.
    pub fn across(&self, te: usize, node: usize) -> usize {
        let t = self.tree_edges[te];
        if t.a == node {
            t.b
        } else {
            t.a
        }
    }

    pub fn node_views(&self) -> Vec<NodeView> {
        (0..self.nodes.len())
            .map(|i| NodeView {
                node: i,
                kind: self.nodes[i].kind,
                neighbors: self
                    .neighbors(i)
                    .into_iter()
                    .map(|j| (j, self.nodes[j].kind))
                    .collect(),
                virtual_edges: self.nodes[i].virtual_edges(),
                real_edges: self.nodes[i].real_edges(),
            })
            .collect()
    }

    /// Merges all skeletons back into the represented graph.
    pub fn reconstruct(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        for node in &self.nodes {
            for e in &node.edges {
                let keep = match e.tag {
                    EdgeTag::Real => true,
                    EdgeTag::Q(_) => node.kind == NodeKind::Q,
                    EdgeTag::Virtual(te) => {
                        if te >= self.tree_edges.len() || self.tree_edges[te].pair != e.endpoints()
                        {
                            return Err(Error::Structural(format!(
                                "virtual edge {:?} does not match tree edge {te}",
                                e.endpoints()
                            )));
                        }
                        false
                    }
                };
                if keep {
                    edges.push(e.endpoints());
                }
            }
        }
        let count = edges.len();
        let g = Graph::new(self.n, edges)?;
        if g.m() != count {
            return Err(Error::Structural(
                "a graph edge is represented more than once".into(),
            ));
        }
        Ok(g)
    }

    /// Checks the structural invariants of the tree against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Structural(msg));
        let k = self.nodes.len();
        if self.tree_edges.len() + 1 != k {
            return fail(format!(
                "{} nodes but {} tree edges",
                k,
                self.tree_edges.len()
            ));
        }
        let mut uf = UnionFind::new(k);
        for t in &self.tree_edges {
            if uf.find(t.a) == uf.find(t.b) {
                return fail("tree edges contain a cycle".into());
            }
            uf.union(t.a, t.b);
            let (ka, kb) = (self.nodes[t.a].kind, self.nodes[t.b].kind);
            if ka == kb && matches!(ka, NodeKind::S | NodeKind::P) {
                return fail(format!("adjacent {ka:?}-nodes {} and {}", t.a, t.b));
            }
        }
        for (te, t) in self.tree_edges.iter().enumerate() {
            for node in [t.a, t.b] {
                let hits = self.nodes[node]
                    .edges
                    .iter()
                    .filter(|e| matches!(e.tag, EdgeTag::Virtual(x) | EdgeTag::Q(x) if x == te))
                    .collect::<Vec<_>>();
                if hits.len() != 1 || hits[0].endpoints() != t.pair {
                    return fail(format!(
                        "tree edge {te} is not matched by one skeleton edge in node {node}"
                    ));
                }
            }
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let skel = node.skeleton_graph();
            let ok = match node.kind {
                NodeKind::S => {
                    node.edges.len() >= 3
                        && skel.m() == skel.n()
                        && (0..skel.n()).all(|v| skel.degree(v) == 2)
                        && skel.is_connected()
                }
                NodeKind::P => node.vertices.len() == 2 && node.edges.len() >= 3,
                NodeKind::Q => node.edges.len() == 1,
                NodeKind::R => skel.m() == node.edges.len() && skel.is_triconnected(),
            };
            if !ok {
                return fail(format!(
                    "node {i} violates the {:?} skeleton shape",
                    node.kind
                ));
            }
        }
        if self.reconstruct()? != *g {
            return fail("reconstruction differs from the input graph".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(t: &SpqrTree) -> Vec<NodeKind> {
        t.nodes.iter().map(|n| n.kind).collect()
    }

    #[test]
    fn k4_is_one_r_node() {
        let g = Graph::complete(4);
        let t = build_spqr(&g).unwrap();
        assert_eq!(kinds(&t), vec![NodeKind::R]);
        assert!(t.nodes[0].edges.iter().all(|e| e.tag == EdgeTag::Real));
        assert_eq!(t.reconstruct().unwrap(), g);
        t.validate(&g).unwrap();
        assert!(t.node_views()[0].neighbors.is_empty());
    }

    #[test]
    fn c5_is_one_s_node() {
        let g = Graph::cycle(5);
        let t = build_spqr(&g).unwrap();
        assert_eq!(kinds(&t), vec![NodeKind::S]);
        assert_eq!(t.nodes[0].vertices, vec![0, 1, 2, 3, 4]);
        t.validate(&g).unwrap();
    }

    #[test]
    fn two_triangles_on_a_shared_edge() {
        // Triangles {0,1,2} and {0,1,3} plus the shared edge {0,1}.
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let t = build_spqr(&g).unwrap();
        t.validate(&g).unwrap();
        let mut ks = kinds(&t);
        ks.sort();
        assert_eq!(ks, vec![NodeKind::S, NodeKind::S, NodeKind::P, NodeKind::Q]);
        let views = t.node_views();
        let p = views.iter().find(|v| v.kind == NodeKind::P).unwrap();
        let mut nk: Vec<NodeKind> = p.neighbors.iter().map(|x| x.1).collect();
        nk.sort();
        assert_eq!(nk, vec![NodeKind::S, NodeKind::S, NodeKind::Q]);
        assert_eq!(t.nodes[p.node].degree(), 3);
        for s in views.iter().filter(|v| v.kind == NodeKind::S) {
            assert_eq!(
                s.neighbors.iter().map(|x| x.1).collect::<Vec<_>>(),
                vec![NodeKind::P]
            );
        }
    }

    #[test]
    fn rejects_non_biconnected() {
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(
            build_spqr(&bowtie),
            Err(Error::Structural("vertex 2 is a cut vertex".into()))
        );
        assert!(build_spqr(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_err());
    }

    #[test]
    fn long_cycle_with_chord() {
        // C6 with chord {0,3}: two S-nodes (4-cycles) joined through a bond.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let t = build_spqr(&g).unwrap();
        t.validate(&g).unwrap();
        let mut ks = kinds(&t);
        ks.sort();
        assert_eq!(ks, vec![NodeKind::S, NodeKind::S, NodeKind::P, NodeKind::Q]);
        assert!(t
            .nodes
            .iter()
            .filter(|n| n.kind == NodeKind::S)
            .all(|n| n.edges.len() == 4));
    }
}
