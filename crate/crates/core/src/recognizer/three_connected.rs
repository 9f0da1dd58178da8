//! 3-connected graphs: peel degree-3 vertices of K4s down to a triangle,
//! then put them back one at a time, keeping every partial drawing that
//! stays outer-fan-planar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::BASE_CASE_MAX_N;
use super::{
    base_case, conclude, is_complete_2hop, partial_fan_planar, RecognitionOutcome, Route,
    TraceEvent, Verdict,
};
use crate::circular::{canonical_sequence, CircularOrder};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Vertices removed at or above this size carry marks: their neighbours
/// must end up consecutive on the circle.
const MARK_MIN_SIZE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelEntry {
    pub vertex: usize,
    pub neighbors: [usize; 3],
    /// Number of vertices in the graph when `vertex` was removed.
    pub size: usize,
    /// Edges marked on behalf of `vertex`; the marks are dropped when it is
    /// reinserted.
    pub edge_marks: Vec<Edge>,
}

impl PeelEntry {
    fn marks_triangle(&self) -> bool {
        self.size >= MARK_MIN_SIZE
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStack {
    pub entries: Vec<PeelEntry>,
    pub remainder: Vec<usize>,
}

/// Removes degree-3 vertices of K4s (smallest id first) until none is
/// left. Fails with a reason when a vertex sits in three marked triangles
/// or on three marked edges, or when the remainder is not a triangle.
pub fn peel(g: &Graph, outer_required: &[Edge]) -> std::result::Result<PeelStack, String> {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut alive = vec![true; n];
    let mut count = n;
    let mut marked: BTreeMap<Edge, Option<usize>> = outer_required
        .iter()
        .map(|&e| (edge(e.0, e.1), None))
        .collect();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut entries = Vec::new();

    let is_edge = |adj: &Vec<Vec<usize>>, a: usize, b: usize| adj[a].contains(&b);
    while count > 3 {
        let pick = (0..n).find(|&v| {
            alive[v]
                && adj[v].len() == 3
                && is_edge(&adj, adj[v][0], adj[v][1])
                && is_edge(&adj, adj[v][0], adj[v][2])
                && is_edge(&adj, adj[v][1], adj[v][2])
        });
        let Some(v) = pick else { break };
        let mut nb = [adj[v][0], adj[v][1], adj[v][2]];
        nb.sort_unstable();
        let mut entry = PeelEntry {
            vertex: v,
            neighbors: nb,
            size: count,
            edge_marks: Vec::new(),
        };
        if count >= MARK_MIN_SIZE {
            let live_triangles: Vec<[usize; 3]> = triangles
                .iter()
                .copied()
                .filter(|t| t.contains(&v) && t.iter().all(|&x| alive[x]))
                .collect();
            let marked_edges = nb
                .iter()
                .filter(|&&x| marked.contains_key(&edge(v, x)))
                .count();
            if live_triangles.len() >= 3 || marked_edges >= 3 {
                return Err(format!(
                    "vertex {v} lies in three marked triangles or on three marked edges"
                ));
            }
            for t in live_triangles {
                let others: Vec<usize> = t.iter().copied().filter(|&x| x != v).collect();
                let e = edge(others[0], others[1]);
                if let std::collections::btree_map::Entry::Vacant(slot) = marked.entry(e) {
                    slot.insert(Some(v));
                    entry.edge_marks.push(e);
                }
            }
            triangles.push(nb);
        }
        for &x in &nb {
            adj[x].retain(|&y| y != v);
        }
        adj[v].clear();
        alive[v] = false;
        count -= 1;
        entries.push(entry);
    }
    let remainder: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let triangle = remainder.len() == 3
        && is_edge(&adj, remainder[0], remainder[1])
        && is_edge(&adj, remainder[0], remainder[2])
        && is_edge(&adj, remainder[1], remainder[2]);
    if !triangle {
        return Err(format!(
            "peeling stops at {} vertices instead of a triangle",
            remainder.len()
        ));
    }
    Ok(PeelStack { entries, remainder })
}

/// Whether the members of `set` form one contiguous block of `seq`.
fn contiguous(seq: &[usize], set: &[usize]) -> bool {
    let k = seq.len();
    let inside = |x: usize| set.contains(&x);
    let starts = (0..k)
        .filter(|&i| inside(seq[i]) && !inside(seq[(i + k - 1) % k]))
        .count();
    starts <= 1
}

fn is_outer(seq: &[usize], e: Edge) -> bool {
    let k = seq.len();
    (0..k).any(|i| edge(seq[i], seq[(i + 1) % k]) == e)
}

/// Reinserts the peeled vertices in reverse order. Returns the complete
/// drawings and the largest number of partial drawings alive at once.
fn reinsert(
    g: &Graph,
    stack: &PeelStack,
    trace: &mut Vec<TraceEvent>,
) -> (Vec<CircularOrder>, usize) {
    let n = g.n();
    let mut present = vec![false; n];
    for &v in &stack.remainder {
        present[v] = true;
    }
    let mut candidates: Vec<Vec<usize>> = vec![stack.remainder.clone()];
    let mut max_live = candidates.len();
    let mut pos = vec![usize::MAX; n];

    for idx in (0..stack.entries.len()).rev() {
        let entry = &stack.entries[idx];
        let v = entry.vertex;
        present[v] = true;
        let pending = &stack.entries[..idx];
        let mut next: Vec<Vec<usize>> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for cand in &candidates {
            let k = cand.len();
            let nb = |x: usize| entry.neighbors.contains(&x);
            for i in 0..k {
                let (a, b) = (cand[i], cand[(i + 1) % k]);
                // Only between two neighbours, with the third next to them.
                let around = nb(cand[(i + k - 1) % k]) || nb(cand[(i + 2) % k]);
                if !(nb(a) && nb(b) && around) {
                    continue;
                }
                let mut seq = cand.clone();
                seq.insert(i + 1, v);
                let marks_ok = pending.iter().all(|w| {
                    w.edge_marks
                        .iter()
                        .all(|&(x, y)| !(present[x] && present[y]) || is_outer(&seq, (x, y)))
                        && (!w.marks_triangle() || {
                            let here: Vec<usize> = w
                                .neighbors
                                .iter()
                                .copied()
                                .filter(|&x| present[x])
                                .collect();
                            contiguous(&seq, &here)
                        })
                });
                if !marks_ok {
                    continue;
                }
                for (p, &x) in seq.iter().enumerate() {
                    pos[x] = p;
                }
                let ok = partial_fan_planar(g, &pos);
                for &x in &seq {
                    pos[x] = usize::MAX;
                }
                if ok && seen.insert(canonical_sequence(&seq)) {
                    next.push(seq);
                }
            }
        }
        candidates = next;
        max_live = max_live.max(candidates.len());
        trace.push(TraceEvent::Reinsert {
            vertex: v,
            live: candidates.len(),
        });
        if candidates.is_empty() {
            break;
        }
    }
    let orders = candidates
        .iter()
        .map(|s| CircularOrder::from_vec_unchecked(canonical_sequence(s)))
        .collect();
    (orders, max_live)
}

/// Decides whether the 3-connected graph `g` is maximal outer-fan-planar
/// with a drawing in which every edge of `outer_required` is an outer
/// edge, and lists all such drawings.
pub fn recognize_3connected(g: &Graph, outer_required: &[Edge]) -> Result<RecognitionOutcome> {
    if !g.is_triconnected() {
        return Err(Error::Structural("graph is not 3-connected".into()));
    }
    if let Some(&(u, v)) = outer_required.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::Structural(format!(
            "required outer edge {{{u}, {v}}} is not in the graph"
        )));
    }
    if g.n() <= BASE_CASE_MAX_N {
        return Ok(base_case(g, outer_required));
    }
    if let Some(orders) = is_complete_2hop(g) {
        let trace = vec![TraceEvent::TwoHop {
            candidates: orders.len(),
        }];
        return Ok(conclude(
            g,
            orders,
            outer_required,
            Route::CompleteTwoHop,
            trace,
            0,
        ));
    }

    let mut trace = Vec::new();
    let stack = match peel(g, outer_required) {
        Ok(stack) => stack,
        Err(reason) => {
            return Ok(RecognitionOutcome::reject(
                Route::Peeling,
                Verdict::RejectedStructure(reason),
                trace,
            ));
        }
    };
    for e in &stack.entries {
        trace.push(TraceEvent::Peel {
            vertex: e.vertex,
            neighbors: e.neighbors,
            size: e.size,
            marked_edges: e.edge_marks.clone(),
        });
    }
    trace.push(TraceEvent::Remainder {
        vertices: stack.remainder.clone(),
    });
    let (drawings, max_live) = reinsert(g, &stack, &mut trace);
    Ok(conclude(
        g,
        drawings,
        outer_required,
        Route::Peeling,
        trace,
        max_live,
    ))
}
