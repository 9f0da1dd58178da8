//! Outer drawings modelled as cyclic vertex orders.
//!
//! Placing the vertices on a circle in a fixed cyclic order and drawing
//! edges as straight chords fixes every crossing: two chords with four
//! distinct endpoints cross exactly when their endpoints interleave. In
//! convex position an edge crossed by two edges sharing a vertex is always
//! crossed from the side of that vertex, so the only fan-planarity condition
//! left to test is the existence of a common endpoint.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// A cyclic sequence of all vertex ids (counterclockwise around the circle).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CircularOrder(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeClass {
    Outer,
    TwoHop,
    Long,
}

impl CircularOrder {
    /// Wraps `order`, which must be a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Input(format!(
                    "vertex {v} appears twice in circular order"
                )));
            }
        }
        Ok(CircularOrder(order))
    }

    pub(crate) fn from_vec_unchecked(order: Vec<usize>) -> Self {
        debug_assert!(CircularOrder::new(order.clone()).is_ok());
        CircularOrder(order)
    }

    pub fn identity(n: usize) -> Self {
        CircularOrder((0..n).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `positions()[v]` is the index of `v` in the sequence.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Lexicographically least sequence among all rotations and reflections.
    pub fn canonicalize(&self) -> CircularOrder {
        CircularOrder(canonical_sequence(&self.0))
    }

    pub fn is_canonical(&self) -> bool {
        canonical_sequence(&self.0) == self.0
    }

    /// The two circle neighbours of `v` as (predecessor, successor).
    pub fn circle_neighbors(&self, v: usize) -> (usize, usize) {
        let n = self.0.len();
        let i = self
            .0
            .iter()
            .position(|&x| x == v)
            .expect("vertex in order");
        (self.0[(i + n - 1) % n], self.0[(i + 1) % n])
    }

    pub fn classify_edge(&self, e: Edge) -> Result<EdgeClass> {
        let n = self.0.len();
        for id in [e.0, e.1] {
            if id >= n {
                return Err(Error::VertexOutOfRange { id, n });
            }
        }
        Ok(classify_by_positions(&self.positions(), n, e))
    }

    pub fn chords_cross(&self, e1: Edge, e2: Edge) -> bool {
        chords_cross_at(&self.positions(), e1, e2)
    }
}

pub(crate) fn canonical_sequence(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| seq[i]).expect("non-empty");
    let forward: Vec<usize> = (0..n).map(|k| seq[(start + k) % n]).collect();
    let backward: Vec<usize> = (0..n).map(|k| seq[(start + n - k) % n]).collect();
    forward.min(backward)
}

pub(crate) fn classify_by_positions(pos: &[usize], n: usize, e: Edge) -> EdgeClass {
    let d = pos[e.0].abs_diff(pos[e.1]);
    match d.min(n - d) {
        1 => EdgeClass::Outer,
        2 => EdgeClass::TwoHop,
        _ => EdgeClass::Long,
    }
}

/// Crossing predicate on a position table: edges sharing an endpoint never
/// cross; otherwise they cross iff exactly one endpoint of `f` lies strictly
/// inside the arc spanned by `e`.
#[inline]
pub(crate) fn chords_cross_at(pos: &[usize], e: Edge, f: Edge) -> bool {
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return false;
    }
    let (lo, hi) = minmax(pos[e.0], pos[e.1]);
    let inside = |v: usize| lo < pos[v] && pos[v] < hi;
    inside(f.0) != inside(f.1)
}

#[inline]
fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Fan condition on a drawing given by positions: every edge crossed at
/// least twice has all its crossing edges sharing one endpoint.
pub(crate) fn is_fan_planar_at(edges: &[Edge], pos: &[usize]) -> bool {
    first_violation_at(edges, pos).is_none()
}

pub(crate) fn first_violation_at(edges: &[Edge], pos: &[usize]) -> Option<Edge> {
    for &e in edges {
        let mut common: Option<CommonVertex> = None;
        for &f in edges {
            if chords_cross_at(pos, e, f) {
                let next = match common {
                    None => CommonVertex::Two(f.0, f.1),
                    Some(c) => c.intersect(f),
                };
                if next == CommonVertex::Empty {
                    return Some(e);
                }
                common = Some(next);
            }
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CommonVertex {
    Two(usize, usize),
    One(usize),
    Empty,
}

impl CommonVertex {
    fn intersect(self, f: Edge) -> CommonVertex {
        let has = |x: usize| x == f.0 || x == f.1;
        match self {
            CommonVertex::Two(a, b) => match (has(a), has(b)) {
                (true, true) => CommonVertex::Two(a, b),
                (true, false) => CommonVertex::One(a),
                (false, true) => CommonVertex::One(b),
                (false, false) => CommonVertex::Empty,
            },
            CommonVertex::One(a) if has(a) => CommonVertex::One(a),
            _ => CommonVertex::Empty,
        }
    }
}

/// Per-edge crossing lists of an outer drawing and its fan-planarity verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingReport {
    /// One entry per graph edge (in graph edge order); each list is sorted.
    pub crossings: Vec<(Edge, Vec<Edge>)>,
    pub outer_fan_planar: bool,
    pub first_violation: Option<Edge>,
}

impl CrossingReport {
    pub fn crossings_of(&self, e: Edge) -> Option<&[Edge]> {
        let e = edge(e.0, e.1);
        self.crossings
            .binary_search_by(|(x, _)| x.cmp(&e))
            .ok()
            .map(|i| self.crossings[i].1.as_slice())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.iter().map(|(_, l)| l.len()).sum::<usize>() / 2
    }
}

/// Computes all crossings of `g` drawn in `ord` and tests the fan condition.
pub fn check_outer_fan_planar(g: &Graph, ord: &CircularOrder) -> CrossingReport {
    assert_eq!(g.n(), ord.len(), "circular order must cover every vertex");
    let pos = ord.positions();
    let edges = g.edges();
    let crossings: Vec<(Edge, Vec<Edge>)> = edges
        .iter()
        .map(|&e| {
            let list = edges
                .iter()
                .copied()
                .filter(|&f| chords_cross_at(&pos, e, f))
                .collect();
            (e, list)
        })
        .collect();
    let first_violation = crossings.iter().find_map(|(e, list)| {
        if list.len() < 2 {
            return None;
        }
        let shared = [list[0].0, list[0].1]
            .into_iter()
            .any(|x| list.iter().all(|f| f.0 == x || f.1 == x));
        (!shared).then_some(*e)
    });
    CrossingReport {
        crossings,
        outer_fan_planar: first_violation.is_none(),
        first_violation,
    }
}

/// Fast verdict-only variant of [`check_outer_fan_planar`].
pub fn is_outer_fan_planar(g: &Graph, ord: &CircularOrder) -> bool {
    is_fan_planar_at(g.edges(), &ord.positions())
}

impl fmt::Display for CircularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CircularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for CircularOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let ids = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad vertex id {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CircularOrder::new(ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(v: &[usize]) -> CircularOrder {
        CircularOrder::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classify() {
        let o = CircularOrder::identity(6);
        assert_eq!(o.classify_edge((0, 1)).unwrap(), EdgeClass::Outer);
        assert_eq!(o.classify_edge((0, 5)).unwrap(), EdgeClass::Outer);
        assert_eq!(o.classify_edge((0, 2)).unwrap(), EdgeClass::TwoHop);
        assert_eq!(o.classify_edge((0, 3)).unwrap(), EdgeClass::Long);
        assert!(o.classify_edge((0, 6)).is_err());
    }

    #[test]
    fn crossing_predicate() {
        let o = CircularOrder::identity(4);
        assert!(o.chords_cross((0, 2), (1, 3)));
        assert!(!o.chords_cross((0, 1), (2, 3)));
        assert!(!CircularOrder::identity(5).chords_cross((0, 2), (2, 4)));
    }

    #[test]
    fn k5_k6_and_two_hop() {
        let k5 = check_outer_fan_planar(&Graph::complete(5), &CircularOrder::identity(5));
        assert!(k5.outer_fan_planar);
        assert_eq!(k5.crossings_of((0, 2)).unwrap(), &[(1, 3), (1, 4)]);

        let k6 = check_outer_fan_planar(&Graph::complete(6), &CircularOrder::identity(6));
        assert!(!k6.outer_fan_planar);
        let list = k6.crossings_of((0, 3)).unwrap();
        assert!(list.contains(&(1, 4)) && list.contains(&(2, 5)));

        let oct = check_outer_fan_planar(&Graph::complete_two_hop(6), &CircularOrder::identity(6));
        assert!(oct.outer_fan_planar);
        // Each 2-hop {i,i+2} is crossed by the two 2-hops at i+1.
        assert_eq!(oct.crossings_of((0, 2)).unwrap(), &[(1, 3), (1, 5)]);
        assert_eq!(oct.crossing_count(), 6);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(ord(&[2, 3, 0, 1]).canonicalize(), ord(&[0, 1, 2, 3]));
        assert_eq!(ord(&[0, 3, 2, 1]).canonicalize(), ord(&[0, 1, 2, 3]));
        assert_eq!(ord(&[1, 0, 2]).canonicalize(), ord(&[0, 1, 2]));
        assert!(ord(&[0, 2, 1, 3]).is_canonical());
    }

    #[test]
    fn order_parsing() {
        let o: CircularOrder = "3 0 2 1".parse().unwrap();
        assert_eq!(o.to_string(), "3 0 2 1");
        assert!("0 0 1".parse::<CircularOrder>().is_err());
        assert!("0 3".parse::<CircularOrder>().is_err());
    }
}
