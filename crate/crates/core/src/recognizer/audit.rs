//! Structural properties that every drawing of a 3-connected maximal
//! outer-fan-planar graph with at least six vertices must have. Used to
//! audit the drawings the recognizer returns.

use serde::{Deserialize, Serialize};

use crate::circular::{chords_cross_at, classify_by_positions, CircularOrder, EdgeClass};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum AuditViolation {
    /// Two crossing long edges without a pair of circle-adjacent endpoints.
    CrossingLongEdgesApart { e: Edge, f: Edge },
    /// A scissor whose four endpoints do not induce a K4.
    ScissorWithoutK4 { e: Edge, f: Edge },
    /// A K4 around a degree-3 vertex that is not drawn on four consecutive
    /// positions.
    K4NotConsecutive { vertex: usize },
    /// A K4 on four consecutive positions whose degree-3 vertices are not
    /// exactly one interior vertex.
    K4DegreeThreeMisplaced { block: [usize; 4] },
}

fn adjacent_on_circle(pos: &[usize], n: usize, a: usize, b: usize) -> bool {
    let d = pos[a].abs_diff(pos[b]);
    d == 1 || d == n - 1
}

/// Lists every violated property of the drawing `ord` of `g`.
pub fn audit_embedding(g: &Graph, ord: &CircularOrder) -> Vec<AuditViolation> {
    let n = g.n();
    let pos = ord.positions();
    let seq = ord.as_slice();
    let mut out = Vec::new();

    let long: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| classify_by_positions(&pos, n, e) == EdgeClass::Long)
        .collect();
    for (i, &e) in long.iter().enumerate() {
        for &f in &long[i + 1..] {
            if !chords_cross_at(&pos, e, f) {
                continue;
            }
            let pairs = [(e.0, f.0), (e.0, f.1), (e.1, f.0), (e.1, f.1)];
            let consecutive = pairs
                .iter()
                .filter(|&&(a, b)| adjacent_on_circle(&pos, n, a, b))
                .count();
            if consecutive == 0 {
                out.push(AuditViolation::CrossingLongEdgesApart { e, f });
            }
            // Crossing chords with two circle-adjacent endpoint pairs form a
            // scissor.
            if consecutive >= 2 {
                let quad = [e.0, e.1, f.0, f.1];
                let k4 = (0..4).all(|a| (a + 1..4).all(|b| g.has_edge(quad[a], quad[b])));
                if !k4 {
                    out.push(AuditViolation::ScissorWithoutK4 { e, f });
                }
            }
        }
    }

    for (v, nb) in g.degree3_k4_vertices() {
        let mut quad: Vec<usize> = nb.iter().chain([&v]).map(|&x| pos[x]).collect();
        quad.sort_unstable();
        let consecutive = (0..4).any(|s| (0..4).all(|k| quad.contains(&((quad[s] + k) % n))));
        if !consecutive {
            out.push(AuditViolation::K4NotConsecutive { vertex: v });
        }
    }

    for s in 0..n {
        let block = [seq[s], seq[(s + 1) % n], seq[(s + 2) % n], seq[(s + 3) % n]];
        let clique = (0..4).all(|a| (a + 1..4).all(|b| g.has_edge(block[a], block[b])));
        if !clique {
            continue;
        }
        let deg3: Vec<usize> = (0..4).filter(|&k| g.degree(block[k]) == 3).collect();
        if !(deg3.len() == 1 && (deg3[0] == 1 || deg3[0] == 2)) {
            out.push(AuditViolation::K4DegreeThreeMisplaced { block });
        }
    }
    out
}
