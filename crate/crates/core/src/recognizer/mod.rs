//! Recognition of maximal outer-fan-planar graphs.
//!
//! Graphs that are not biconnected are rejected outright. Graphs with at
//! most five vertices are decided exhaustively. 3-connected graphs go
//! through the complete 2-hop test or the degree-3 peeling procedure, and
//! the remaining biconnected graphs are decided from their SPQR-tree.

mod audit;
mod biconnected;
mod porosity;
mod three_connected;
mod two_hop;

use serde::{Deserialize, Serialize};

use crate::circular::{is_fan_planar_at, CircularOrder};
use crate::graph::{Edge, Graph};
use crate::oracle::{insertable_non_edge, Oracle};
use crate::symmetry::reduce_orders;

pub use audit::{audit_embedding, AuditViolation};
pub use biconnected::recognize_biconnected;
pub use porosity::is_porous;
pub use three_connected::{recognize_3connected, PeelEntry, PeelStack};
pub use two_hop::{complete_2hop_candidates, is_complete_2hop};

/// Graphs up to this size are decided by exhaustive search.
pub const BASE_CASE_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "reason")]
pub enum Verdict {
    Accepted,
    RejectedNotBiconnected,
    RejectedStructure(String),
    RejectedNoEmbedding,
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// Which procedure produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    NotBiconnected,
    BaseCase,
    CompleteTwoHop,
    Peeling,
    Spqr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum TraceEvent {
    BaseCase {
        n: usize,
    },
    TwoHop {
        candidates: usize,
    },
    Peel {
        vertex: usize,
        neighbors: [usize; 3],
        size: usize,
        marked_edges: Vec<Edge>,
    },
    Remainder {
        vertices: Vec<usize>,
    },
    Reinsert {
        vertex: usize,
        live: usize,
    },
    Saturation {
        insertable: Option<Edge>,
    },
    Node {
        node: usize,
        kind: String,
        holds: bool,
        condition: u8,
    },
    Reject {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionOutcome {
    pub verdict: Verdict,
    pub route: Route,
    /// Valid drawings up to rotation, reflection and graph symmetry.
    pub embeddings: Vec<CircularOrder>,
    /// Every valid drawing as a canonical order of the labelled graph.
    pub orders: Vec<CircularOrder>,
    /// Largest number of partial drawings alive at once while reinserting
    /// peeled vertices (0 when peeling was not used).
    pub max_live_candidates: usize,
    pub trace: Vec<TraceEvent>,
}

impl RecognitionOutcome {
    pub(crate) fn reject(route: Route, verdict: Verdict, mut trace: Vec<TraceEvent>) -> Self {
        if let Verdict::RejectedStructure(reason) = &verdict {
            trace.push(TraceEvent::Reject {
                reason: reason.clone(),
            });
        }
        RecognitionOutcome {
            verdict,
            route,
            embeddings: Vec::new(),
            orders: Vec::new(),
            max_live_candidates: 0,
            trace,
        }
    }

    pub fn is_accepted(&self) -> bool {
        self.verdict.is_accepted()
    }
}

/// Whether every edge of `required` joins circle neighbours in `ord`.
pub(crate) fn all_outer(ord: &CircularOrder, required: &[Edge]) -> bool {
    required.iter().all(|&(u, v)| {
        let (a, b) = ord.circle_neighbors(u);
        a == v || b == v
    })
}

/// Finishes a recognition from the complete set of drawings of `g` and
/// keeps those in which all of `outer_required` are outer edges. Only the
/// exhaustive base case still has to rule out an addable edge; the other
/// routes establish maximality structurally.
pub(crate) fn conclude(
    g: &Graph,
    drawings: Vec<CircularOrder>,
    outer_required: &[Edge],
    route: Route,
    mut trace: Vec<TraceEvent>,
    max_live_candidates: usize,
) -> RecognitionOutcome {
    if drawings.is_empty() {
        return RecognitionOutcome::reject(route, Verdict::RejectedNoEmbedding, trace);
    }
    if route == Route::BaseCase {
        let insertable = drawings.iter().find_map(|d| insertable_non_edge(g, d));
        trace.push(TraceEvent::Saturation { insertable });
        if let Some((u, v)) = insertable {
            let reason = format!("edge {{{u}, {v}}} can be added");
            return RecognitionOutcome::reject(route, Verdict::RejectedStructure(reason), trace);
        }
    }
    let mut orders: Vec<CircularOrder> = drawings
        .into_iter()
        .filter(|d| all_outer(d, outer_required))
        .collect();
    orders.sort();
    orders.dedup();
    if orders.is_empty() {
        return RecognitionOutcome::reject(route, Verdict::RejectedNoEmbedding, trace);
    }
    RecognitionOutcome {
        verdict: Verdict::Accepted,
        route,
        embeddings: reduce_orders(g, &orders),
        orders,
        max_live_candidates,
        trace,
    }
}

/// Exhaustive decision for graphs with at most [`BASE_CASE_MAX_N`] vertices.
pub(crate) fn base_case(g: &Graph, outer_required: &[Edge]) -> RecognitionOutcome {
    let drawings = Oracle::with_max_n(BASE_CASE_MAX_N)
        .labeled_embeddings(g)
        .expect("base case is within the exhaustive bound");
    conclude(
        g,
        drawings,
        outer_required,
        Route::BaseCase,
        vec![TraceEvent::BaseCase { n: g.n() }],
        0,
    )
}

/// Fan-planarity of the subgraph induced by the placed vertices, where
/// `pos[v] == usize::MAX` marks an absent vertex.
pub(crate) fn partial_fan_planar(g: &Graph, pos: &[usize]) -> bool {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
        .collect();
    is_fan_planar_at(&edges, pos)
}

/// Decides maximal outer-fan-planarity of `g` and lists its drawings.
pub fn recognize(g: &Graph) -> RecognitionOutcome {
    if g.n() < 3 || !g.is_biconnected() {
        return RecognitionOutcome::reject(
            Route::NotBiconnected,
            Verdict::RejectedNotBiconnected,
            Vec::new(),
        );
    }
    if g.n() <= BASE_CASE_MAX_N {
        return base_case(g, &[]);
    }
    if g.is_triconnected() {
        recognize_3connected(g, &[]).expect("precondition checked")
    } else {
        recognize_biconnected(g)
    }
}
