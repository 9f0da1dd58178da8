//! Exhaustive ground truth for outer-fan-planarity and its maximality.
//!
//! Every cyclic order with vertex 0 in front and the reflection fixed
//! (`order[1] < order[n-1]`) is tried, which is exactly the set of
//! canonical orders: `(n-1)!/2` candidates for `n >= 3`.

use std::ops::ControlFlow;

use crate::circular::{is_fan_planar_at, CircularOrder};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::symmetry::reduce_orders;

pub const DEFAULT_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub max_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// Visits every canonical cyclic order of `0..n` in lexicographic order.
pub fn for_each_canonical_order<F>(n: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if n <= 2 {
        let _ = visit(&(0..n).collect::<Vec<_>>());
        return;
    }
    let mut seq = Vec::with_capacity(n);
    seq.push(0);
    let mut used = vec![false; n];
    used[0] = true;
    let _ = permute(n, &mut seq, &mut used, &mut visit);
}

fn permute<F>(n: usize, seq: &mut Vec<usize>, used: &mut [bool], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if seq.len() == n {
        return if seq[1] < seq[n - 1] {
            visit(seq)
        } else {
            ControlFlow::Continue(())
        };
    }
    for v in 1..n {
        if !used[v] {
            used[v] = true;
            seq.push(v);
            let flow = permute(n, seq, used, visit);
            seq.pop();
            used[v] = false;
            flow?;
        }
    }
    ControlFlow::Continue(())
}

fn positions_of(seq: &[usize], pos: &mut [usize]) {
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = i;
    }
}

/// Whether some non-edge of `g` can be drawn as an extra chord in `ord`
/// without breaking fan-planarity; returns the first such pair.
pub fn insertable_non_edge(g: &Graph, ord: &CircularOrder) -> Option<Edge> {
    let pos = ord.positions();
    let mut edges = g.edges().to_vec();
    edges.push((0, 0));
    let last = edges.len() - 1;
    for e in g.non_edges() {
        edges[last] = e;
        if is_fan_planar_at(&edges, &pos) {
            return Some(e);
        }
    }
    None
}

impl Oracle {
    pub fn with_max_n(max_n: usize) -> Self {
        Oracle { max_n }
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            Err(Error::SizeLimit {
                n: g.n(),
                max: self.max_n,
            })
        } else {
            Ok(())
        }
    }

    /// The lexicographically least canonical order in which `g` is
    /// outer-fan-planar, if any.
    pub fn outer_fan_planar(&self, g: &Graph) -> Result<Option<CircularOrder>> {
        self.check_size(g)?;
        let mut pos = vec![0; g.n()];
        let mut found = None;
        for_each_canonical_order(g.n(), |seq| {
            positions_of(seq, &mut pos);
            if is_fan_planar_at(g.edges(), &pos) {
                found = Some(CircularOrder::from_vec_unchecked(seq.to_vec()));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(found)
    }

    /// Every canonical order in which `g` is outer-fan-planar, sorted.
    pub fn labeled_embeddings(&self, g: &Graph) -> Result<Vec<CircularOrder>> {
        self.check_size(g)?;
        let mut pos = vec![0; g.n()];
        let mut out = Vec::new();
        for_each_canonical_order(g.n(), |seq| {
            positions_of(seq, &mut pos);
            if is_fan_planar_at(g.edges(), &pos) {
                out.push(CircularOrder::from_vec_unchecked(seq.to_vec()));
            }
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Valid drawings up to rotation, reflection and graph automorphism:
    /// one least representative per class, sorted.
    pub fn enumerate_embeddings(&self, g: &Graph) -> Result<Vec<CircularOrder>> {
        Ok(reduce_orders(g, &self.labeled_embeddings(g)?))
    }

    /// Maximal outer-fan-planarity. An extra edge `e` keeps the graph
    /// outer-fan-planar only in an order that is already valid for `g`, so
    /// it suffices to try every non-edge in every valid order of `g`.
    pub fn maximal_outer_fan_planar(&self, g: &Graph) -> Result<bool> {
        let orders = self.labeled_embeddings(g)?;
        Ok(!orders.is_empty() && orders.iter().all(|o| insertable_non_edge(g, o).is_none()))
    }

    /// Literal definition: outer-fan-planar, and for every non-adjacent
    /// pair the augmented graph has no valid order at all.
    pub fn maximal_outer_fan_planar_by_definition(&self, g: &Graph) -> Result<bool> {
        if self.outer_fan_planar(g)?.is_none() {
            return Ok(false);
        }
        for (u, v) in g.non_edges() {
            if self.outer_fan_planar(&g.with_edge(u, v)?)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn oracle_outer_fan_planar(g: &Graph) -> Result<Option<CircularOrder>> {
    Oracle::default().outer_fan_planar(g)
}

pub fn enumerate_embeddings(g: &Graph) -> Result<Vec<CircularOrder>> {
    Oracle::default().enumerate_embeddings(g)
}

pub fn oracle_maximal_outer_fan_planar(g: &Graph) -> Result<bool> {
    Oracle::default().maximal_outer_fan_planar(g)
}
