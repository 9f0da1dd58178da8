//! Graph families for cross-checking the recognizer against the oracle:
//! every labelled biconnected graph on a few vertices, and seeded random
//! biconnected graphs biased towards (near-)maximal outer-fan-planar ones.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circular::{is_fan_planar_at, CircularOrder};
use crate::graph::{edge, Edge, Graph};
use crate::oracle::{insertable_non_edge, Oracle};
use crate::recognizer::{audit_embedding, recognize};
use crate::spqr::build_spqr;

/// All labelled graphs on `n` vertices that are biconnected, in order of
/// their edge bitmask over the pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn all_biconnected(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        if (mask.count_ones() as usize) < n {
            return None;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("pairs are valid");
        g.is_biconnected().then_some(g)
    })
}

/// Adds edges in random order as long as the drawing `ord` stays
/// outer-fan-planar, starting from the cycle of `ord`.
fn saturate_in_order<R: Rng>(n: usize, ord: &[usize], rng: &mut R) -> Vec<Edge> {
    let mut pos = vec![0; n];
    for (i, &v) in ord.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<Edge> = (0..n).map(|i| edge(ord[i], ord[(i + 1) % n])).collect();
    let mut rest: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    for e in rest {
        edges.push(e);
        if !is_fan_planar_at(&edges, &pos) {
            edges.pop();
        }
    }
    edges
}

/// Stacks degree-3 vertices onto consecutive triangles of a growing
/// drawing, starting from a triangle.
fn stacked<R: Rng>(n: usize, rng: &mut R) -> Vec<Edge> {
    let mut seq = vec![0, 1, 2];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let k = seq.len();
        let i = rng.gen_range(0..k);
        let tri = [seq[i], seq[(i + 1) % k], seq[(i + 2) % k]];
        if tri
            .iter()
            .enumerate()
            .all(|(a, &x)| tri[a + 1..].iter().all(|&y| edges.contains(&edge(x, y))))
        {
            edges.extend(tri.iter().map(|&x| edge(x, v)));
        } else {
            edges.extend([edge(tri[0], v), edge(tri[1], v)]);
        }
        let at = if rng.gen_bool(0.5) {
            (i + 1) % k
        } else {
            (i + 2) % k
        };
        seq.insert(if at == 0 { k } else { at }, v);
    }
    edges
}

/// A seeded random biconnected graph on `n >= 3` vertices. Draws from a
/// mix of dense random graphs, graphs saturated in a random circle order
/// (optionally with one edge removed or added) and stacked triangles.
pub fn random_biconnected<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let mut edges = match rng.gen_range(0..10) {
            0..=2 => {
                let p = rng.gen_range(0.3..0.9);
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect()
            }
            3..=8 => {
                let mut ord: Vec<usize> = (0..n).collect();
                ord.shuffle(rng);
                saturate_in_order(n, &ord, rng)
            }
            _ => stacked(n, rng),
        };
        match rng.gen_range(0..6) {
            0 if !edges.is_empty() => {
                let i = rng.gen_range(0..edges.len());
                edges.swap_remove(i);
            }
            1 => {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v {
                    edges.push((u, v));
                }
            }
            _ => {}
        }
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(rng);
        let g = Graph::new(n, edges.into_iter().map(|(u, v)| (labels[u], labels[v])))
            .expect("valid edges");
        if g.is_biconnected() {
            return g;
        }
    }
}

/// `count` seeded random biconnected graphs on `n` vertices.
pub fn random_biconnected_set(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    (0..count)
        .map(|_| random_biconnected(n, &mut rng))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub graphs: usize,
    pub accepted: usize,
    pub accepted_3connected: usize,
    pub oracle_outer_fan_planar: usize,
    /// Graphs where the verdict differs from the oracle.
    pub disagreements: Vec<Graph>,
    /// Accepted graphs whose drawings differ from the oracle's.
    pub embedding_mismatches: Vec<Graph>,
    /// Accepted 3-connected graphs with an edge count other than 2n, 3n-6.
    pub edge_count_violations: Vec<Graph>,
    /// Outer-fan-planar graphs with more than 5n-10 edges.
    pub density_violations: Vec<Graph>,
    pub max_live_candidates: usize,
    pub audit_violations: Vec<(Graph, CircularOrder)>,
    pub spqr_failures: Vec<Graph>,
}

impl SweepReport {
    pub fn merge(&mut self, other: SweepReport) {
        self.graphs += other.graphs;
        self.accepted += other.accepted;
        self.accepted_3connected += other.accepted_3connected;
        self.oracle_outer_fan_planar += other.oracle_outer_fan_planar;
        self.disagreements.extend(other.disagreements);
        self.embedding_mismatches.extend(other.embedding_mismatches);
        self.edge_count_violations
            .extend(other.edge_count_violations);
        self.density_violations.extend(other.density_violations);
        self.max_live_candidates = self.max_live_candidates.max(other.max_live_candidates);
        self.audit_violations.extend(other.audit_violations);
        self.spqr_failures.extend(other.spqr_failures);
    }

    /// Checks one biconnected graph against the oracle and records every
    /// property the sweeps track.
    pub fn check(&mut self, g: &Graph) {
        let n = g.n();
        self.graphs += 1;
        let drawings = Oracle::default()
            .labeled_embeddings(g)
            .expect("sweep graphs are small");
        let maximal =
            !drawings.is_empty() && drawings.iter().all(|d| insertable_non_edge(g, d).is_none());
        if !drawings.is_empty() {
            self.oracle_outer_fan_planar += 1;
            if n >= 4 && g.m() > 5 * n - 10 {
                self.density_violations.push(g.clone());
            }
        }

        let out = recognize(g);
        if out.is_accepted() != maximal {
            self.disagreements.push(g.clone());
        }
        self.max_live_candidates = self.max_live_candidates.max(out.max_live_candidates);
        if out.is_accepted() {
            self.accepted += 1;
            if out.orders != drawings {
                self.embedding_mismatches.push(g.clone());
            }
            if g.is_triconnected() {
                self.accepted_3connected += 1;
                if g.m() != 2 * n && g.m() + 6 != 3 * n {
                    self.edge_count_violations.push(g.clone());
                }
                if n >= 6 {
                    for d in &out.orders {
                        if !audit_embedding(g, d).is_empty() {
                            self.audit_violations.push((g.clone(), d.clone()));
                        }
                    }
                }
            }
        }
        let spqr_ok = build_spqr(g).and_then(|t| t.validate(g)).is_ok();
        if !spqr_ok {
            self.spqr_failures.push(g.clone());
        }
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
            && self.embedding_mismatches.is_empty()
            && self.edge_count_violations.is_empty()
            && self.density_violations.is_empty()
            && self.audit_violations.is_empty()
            && self.spqr_failures.is_empty()
    }
}

pub fn sweep<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> SweepReport {
    let mut report = SweepReport::default();
    for g in graphs {
        report.check(g);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exhaustive_counts() {
        assert_eq!(all_biconnected(3).count(), 1);
        // Biconnected labelled graphs on four vertices: 3 four-cycles,
        // 6 diamonds and K4.
        assert_eq!(all_biconnected(4).count(), 10);
    }

    #[test]
    fn random_graphs_are_biconnected_and_seeded() {
        let a = random_biconnected_set(7, 20, 3);
        assert!(a.iter().all(|g| g.is_biconnected() && g.n() == 7));
        assert_eq!(a, random_biconnected_set(7, 20, 3));
    }
}
