//! Biconnected graphs that are not 3-connected, decided from the
//! SPQR-tree: every R-node skeleton must be maximal with its virtual edges
//! outer, S-nodes must be triangles, P-nodes must join exactly two
//! skeletons and one graph edge, and no two skeletons glued at a P-node
//! may leave room for an extra edge around the shared pair.

use std::collections::BTreeMap;

use super::{
    conclude, is_porous, recognize_3connected, RecognitionOutcome, Route, TraceEvent, Verdict,
};
use crate::circular::{canonical_sequence, is_outer_fan_planar, CircularOrder};
use crate::graph::{edge, Edge, Graph};
use crate::spqr::{build_spqr, NodeKind, SpqrTree};

/// Upper bound on the number of glued drawings that are enumerated.
pub const ASSEMBLY_CAP: usize = 20_000;

/// An S- or R-node skeleton together with its admissible drawings.
struct Block {
    node: usize,
    vertices: Vec<usize>,
    skeleton: Graph,
    local_orders: Vec<CircularOrder>,
}

impl Block {
    fn local(&self, v: usize) -> usize {
        self.vertices
            .iter()
            .position(|&x| x == v)
            .expect("vertex of the skeleton")
    }

    fn global_sequence(&self, d: &CircularOrder) -> Vec<usize> {
        d.as_slice().iter().map(|&x| self.vertices[x]).collect()
    }
}

fn fail(
    node: usize,
    kind: NodeKind,
    condition: u8,
    reason: String,
    mut trace: Vec<TraceEvent>,
) -> RecognitionOutcome {
    trace.push(TraceEvent::Node {
        node,
        kind: format!("{kind:?}"),
        holds: false,
        condition,
    });
    RecognitionOutcome::reject(Route::Spqr, Verdict::RejectedStructure(reason), trace)
}

/// Decides a biconnected graph through its SPQR-tree.
pub fn recognize_biconnected(g: &Graph) -> RecognitionOutcome {
    let tree = match build_spqr(g) {
        Ok(t) => t,
        Err(_) => {
            return RecognitionOutcome::reject(
                Route::NotBiconnected,
                Verdict::RejectedNotBiconnected,
                Vec::new(),
            )
        }
    };
    let mut trace = Vec::new();

    if tree.nodes.len() == 1 {
        let node = &tree.nodes[0];
        if node.kind == NodeKind::S && node.edges.len() > 3 {
            return fail(
                0,
                NodeKind::S,
                3,
                format!("chordless cycle of length {}", node.edges.len()),
                trace,
            );
        }
    }

    // Conditions 2 to 4 only look at the tree.
    for (i, node) in tree.nodes.iter().enumerate() {
        let neighbor_kinds: Vec<NodeKind> = tree
            .neighbors(i)
            .iter()
            .map(|&j| tree.nodes[j].kind)
            .collect();
        match node.kind {
            NodeKind::S if node.degree() != 3 => {
                return fail(
                    i,
                    node.kind,
                    3,
                    format!("S-node {i} is a cycle of length {}", node.degree()),
                    trace,
                );
            }
            NodeKind::P if node.degree() != 3 || !neighbor_kinds.contains(&NodeKind::Q) => {
                return fail(
                    i,
                    node.kind,
                    4,
                    format!("P-node {i} has degree {} or no graph edge", node.degree()),
                    trace,
                );
            }
            NodeKind::R
                if neighbor_kinds
                    .iter()
                    .any(|k| matches!(k, NodeKind::R | NodeKind::S)) =>
            {
                return fail(
                    i,
                    node.kind,
                    2,
                    format!("R-node {i} is adjacent to an R- or S-node"),
                    trace,
                );
            }
            _ => {}
        }
    }

    // Condition 1: R-node skeletons with their virtual edges outer.
    let mut blocks: BTreeMap<usize, Block> = BTreeMap::new();
    let mut max_live = 0;
    for (i, node) in tree.nodes.iter().enumerate() {
        let skeleton = node.skeleton_graph();
        let local_orders = match node.kind {
            NodeKind::S => vec![CircularOrder::identity(3)],
            NodeKind::R => {
                let index = |v: usize| node.vertices.binary_search(&v).expect("skeleton vertex");
                let required: Vec<Edge> = node
                    .virtual_edges()
                    .iter()
                    .map(|&(u, v)| edge(index(u), index(v)))
                    .collect();
                let out = recognize_3connected(&skeleton, &required)
                    .expect("R-node skeletons are 3-connected");
                max_live = max_live.max(out.max_live_candidates);
                if !out.is_accepted() {
                    return fail(
                        i,
                        node.kind,
                        1,
                        format!("R-node {i} skeleton is not maximal with outer virtual edges"),
                        trace,
                    );
                }
                out.orders
            }
            _ => continue,
        };
        trace.push(TraceEvent::Node {
            node: i,
            kind: format!("{:?}", node.kind),
            holds: true,
            condition: 1,
        });
        blocks.insert(
            i,
            Block {
                node: i,
                vertices: node.vertices.clone(),
                skeleton,
                local_orders,
            },
        );
    }

    // Condition 5 at every P-node.
    for (i, node) in tree.nodes.iter().enumerate() {
        if node.kind != NodeKind::P {
            continue;
        }
        let pair = (node.vertices[0], node.vertices[1]);
        let sides: Vec<&Block> = tree
            .neighbors(i)
            .iter()
            .filter_map(|j| blocks.get(j))
            .collect();
        if let Some(reason) = porosity_violation(&tree, pair, &sides) {
            return fail(i, node.kind, 5, format!("P-node {i}: {reason}"), trace);
        }
        trace.push(TraceEvent::Node {
            node: i,
            kind: "P".into(),
            holds: true,
            condition: 5,
        });
    }

    let drawings = assemble(&tree, &blocks, g, &mut trace);
    conclude(g, drawings, &[], Route::Spqr, trace, max_live)
}

/// Checks the porosity exclusion for the two skeletons glued at the pair
/// `{s, t}`; returns a description of the first violation.
fn porosity_violation(tree: &SpqrTree, (s, t): Edge, sides: &[&Block]) -> Option<String> {
    let porous = |b: &Block, drawings: &[CircularOrder], e: Edge, around: usize| {
        is_porous(
            &b.skeleton,
            drawings,
            edge(b.local(e.0), b.local(e.1)),
            b.local(around),
        )
        .expect("edge is outer in every drawing")
    };
    for around in [s, t] {
        if sides
            .iter()
            .all(|b| porous(b, &b.local_orders, (s, t), around))
        {
            return Some(format!(
                "{{{s}, {t}}} is porous around {around} on both sides"
            ));
        }
    }
    // A skeleton can only sit on the same side of {s, t} as the other one
    // if each leaves room next to a graph edge at opposite ends of the pair.
    let squeeze = |b: &Block, end: usize, other: usize| {
        let node = &tree.nodes[b.node];
        b.local_orders.iter().any(|d| {
            let (p, q) = d.circle_neighbors(b.local(end));
            let beyond = b.vertices[if p == b.local(other) { q } else { p }];
            let e = edge(beyond, end);
            node.is_plain_real(e) && porous(b, std::slice::from_ref(d), e, end)
        })
    };
    if let [x, y] = sides {
        for (end, other) in [(s, t), (t, s)] {
            if squeeze(x, end, other) && squeeze(y, other, end) {
                return Some(format!(
                    "the two sides fit next to each other at {end} and {other}"
                ));
            }
        }
    }
    None
}

/// Glues one drawing of every skeleton into drawings of the whole graph:
/// each child skeleton is placed in the gap between the two vertices it
/// shares with its parent.
fn assemble(
    tree: &SpqrTree,
    blocks: &BTreeMap<usize, Block>,
    g: &Graph,
    trace: &mut Vec<TraceEvent>,
) -> Vec<CircularOrder> {
    let Some(&root) = blocks.keys().next() else {
        return Vec::new();
    };

    // Parent-first list of (block, pair shared with the parent).
    let mut order: Vec<(usize, Option<Edge>)> = vec![(root, None)];
    let mut visited = vec![false; tree.nodes.len()];
    visited[root] = true;
    let mut k = 0;
    while k < order.len() {
        let (b, _) = order[k];
        k += 1;
        for p in tree.neighbors(b) {
            if visited[p] || tree.nodes[p].kind != NodeKind::P {
                continue;
            }
            visited[p] = true;
            for c in tree.neighbors(p) {
                if !visited[c] && blocks.contains_key(&c) {
                    visited[c] = true;
                    let v = &tree.nodes[p].vertices;
                    order.push((c, Some((v[0], v[1]))));
                }
            }
        }
    }

    let mut partial: Vec<Vec<usize>> = blocks[&root]
        .local_orders
        .iter()
        .map(|d| blocks[&root].global_sequence(d))
        .collect();
    for &(b, pair) in &order[1..] {
        let (s, t) = pair.expect("child blocks hang off a pair");
        let block = &blocks[&b];
        let mut next = Vec::new();
        'outer: for seq in &partial {
            for d in &block.local_orders {
                if next.len() >= ASSEMBLY_CAP {
                    trace.push(TraceEvent::Reject {
                        reason: format!("assembly stopped at {ASSEMBLY_CAP} drawings"),
                    });
                    break 'outer;
                }
                if let Some(glued) = glue(seq, &block.global_sequence(d), s, t) {
                    next.push(glued);
                }
            }
        }
        partial = next;
    }

    let mut out: Vec<CircularOrder> = partial
        .into_iter()
        .map(|s| CircularOrder::from_vec_unchecked(canonical_sequence(&s)))
        .filter(|o| is_outer_fan_planar(g, o))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Inserts the vertices of `child` strictly between `s` and `t` into the
/// gap of `host` where `s` and `t` are neighbours, keeping `s` next to the
/// child's neighbour of `s`.
fn glue(host: &[usize], child: &[usize], s: usize, t: usize) -> Option<Vec<usize>> {
    let k = child.len();
    let i = child.iter().position(|&x| x == s)?;
    let step = if child[(i + 1) % k] == t { k - 1 } else { 1 };
    let path: Vec<usize> = (1..k - 1).map(|j| child[(i + j * step) % k]).collect();
    if child[(i + (k - 1) * step) % k] != t {
        return None;
    }
    let h = host.len();
    let a = host.iter().position(|&x| x == s)?;
    let mut out = Vec::with_capacity(h + path.len());
    if host[(a + 1) % h] == t {
        for j in 0..h {
            out.push(host[(a + j) % h]);
            if j == 0 {
                out.extend_from_slice(&path);
            }
        }
    } else if host[(a + h - 1) % h] == t {
        for j in 0..h {
            out.push(host[(a + j) % h]);
        }
        out.extend(path.iter().rev());
    } else {
        return None;
    }
    Some(out)
}
