//! Fan-planarity with a fixed rotation system, built from 3-Partition
//! instances.
//!
//! The generated graph is a ring of four barrier gadgets (cycles plus all
//! their 2-hops) enclosing `3m` columns of cells separated by floor
//! gadgets, and `m` transversal paths between the two walls. A witness
//! drawing lists, for every edge, the edges crossing it in order; the
//! validator checks it combinatorially against the fixed rotation system.

mod generate;
mod validate;
mod witness;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

pub use generate::gen_instance;
pub use validate::{validate_witness, ValidationReport, Violation};
pub use witness::{
    barrier_witness, inject_barrier_crossing, inject_pattern_one, partition_from_values,
    route_witness, Injection, WitnessDrawing,
};

/// A 3-Partition input: `3m` integers strictly between `B/4` and `B/2`
/// summing to `mB`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub m: usize,
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "B")]
    pub b: u64,
}

impl ThreePartitionInstance {
    pub fn new(m: usize, a: Vec<u64>, b: u64) -> Result<Self> {
        let tp = ThreePartitionInstance { m, a, b };
        tp.validate()?;
        Ok(tp)
    }

    /// Checks the 3-Partition invariants plus the size requirements of the
    /// construction (at least two groups, floors of at least five vertices).
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Input(msg));
        if self.m < 2 {
            return fail(format!("m = {} but the construction needs m >= 2", self.m));
        }
        if self.a.len() != 3 * self.m {
            return fail(format!("|A| = {} but 3m = {}", self.a.len(), 3 * self.m));
        }
        let sum: u64 = self.a.iter().sum();
        if sum != self.m as u64 * self.b {
            return fail(format!(
                "sum of A is {sum} but mB = {}",
                self.m as u64 * self.b
            ));
        }
        for (i, &x) in self.a.iter().enumerate() {
            if 4 * x <= self.b || 2 * x >= self.b {
                return fail(format!(
                    "a_{i} = {x} is not strictly between B/4 and B/2 (B = {})",
                    self.b
                ));
            }
        }
        let k = self.k() as u64;
        let smallest = *self.a.iter().min().expect("A is non-empty");
        if k + smallest < 7 {
            return fail(format!(
                "B = {} is too small: a floor would have fewer than five vertices",
                self.b
            ));
        }
        Ok(())
    }

    /// Vertical edges in every non-central cell: `ceil(B/2) + 1`.
    pub fn k(&self) -> usize {
        (self.b as usize).div_ceil(2) + 1
    }

    /// Edges of each transversal path: `(3m - 3)K + B`.
    pub fn path_length(&self) -> usize {
        (3 * self.m - 3) * self.k() + self.b as usize
    }

    /// Vertices of each beam: `3mK`.
    pub fn beam_length(&self) -> usize {
        3 * self.m * self.k()
    }

    /// Number of vertical edges in cell `cell` (0 = topmost) of column `column`.
    pub fn cell_size(&self, column: usize, cell: usize) -> usize {
        if cell == self.m - 1 {
            self.a[column] as usize
        } else {
            self.k()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GadgetKind {
    TopBeam,
    RightWall,
    BottomBeam,
    LeftWall,
    Floor { column: usize, floor: usize },
}

/// A barrier gadget: the cycle (counterclockwise) and all its 2-hops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    #[serde(flatten)]
    pub kind: GadgetKind,
    pub cycle: Vec<usize>,
}

impl Gadget {
    pub fn cycle_edges(&self) -> Vec<Edge> {
        let k = self.cycle.len();
        (0..k)
            .map(|i| edge(self.cycle[i], self.cycle[(i + 1) % k]))
            .collect()
    }

    pub fn two_hops(&self) -> Vec<Edge> {
        let k = self.cycle.len();
        (0..k)
            .map(|i| edge(self.cycle[i], self.cycle[(i + 2) % k]))
            .collect()
    }
}

/// A vertical edge of cell `cell` in column `column`, `index`-th from the
/// left; `upper` and `lower` are its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertical {
    pub column: usize,
    pub cell: usize,
    pub index: usize,
    pub upper: usize,
    pub lower: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "kebab-case")]
pub enum EdgeRole {
    GadgetCycle {
        gadget: usize,
    },
    GadgetTwoHop {
        gadget: usize,
    },
    Vertical {
        column: usize,
        cell: usize,
        index: usize,
    },
    Path {
        path: usize,
        index: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub m: usize,
    #[serde(rename = "B")]
    pub b: u64,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "A")]
    pub a: Vec<u64>,
}

/// A generated instance: the graph, its rotation system and the roles of
/// its parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub n: usize,
    pub edges: Vec<Edge>,
    /// Counterclockwise neighbour cycle of every vertex.
    pub rotation: Vec<Vec<usize>>,
    pub params: Params,
    pub gadgets: Vec<Gadget>,
    pub verticals: Vec<Vertical>,
    /// Vertex sequences of the transversal paths, from `u` to `v`, topmost
    /// path first.
    pub paths: Vec<Vec<usize>>,
    pub u: usize,
    pub v: usize,
}

impl ReductionInstance {
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("instance edges are valid")
    }

    pub fn three_partition(&self) -> ThreePartitionInstance {
        ThreePartitionInstance {
            m: self.params.m,
            a: self.params.a.clone(),
            b: self.params.b,
        }
    }

    /// Role of every edge.
    pub fn edge_roles(&self) -> BTreeMap<Edge, EdgeRole> {
        let mut roles = BTreeMap::new();
        for (gi, g) in self.gadgets.iter().enumerate() {
            for e in g.cycle_edges() {
                roles.insert(e, EdgeRole::GadgetCycle { gadget: gi });
            }
            for e in g.two_hops() {
                roles.insert(e, EdgeRole::GadgetTwoHop { gadget: gi });
            }
        }
        for vt in &self.verticals {
            roles.insert(
                edge(vt.upper, vt.lower),
                EdgeRole::Vertical {
                    column: vt.column,
                    cell: vt.cell,
                    index: vt.index,
                },
            );
        }
        for (pi, p) in self.paths.iter().enumerate() {
            for (i, w) in p.windows(2).enumerate() {
                roles.insert(edge(w[0], w[1]), EdgeRole::Path { path: pi, index: i });
            }
        }
        roles
    }

    /// The same instance without its transversal paths and their interior
    /// vertices (vertex ids are kept; the former path vertices become
    /// isolated and are dropped from `n` only if they are the highest ids).
    pub fn without_paths(&self) -> ReductionInstance {
        let path_edges: std::collections::BTreeSet<Edge> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| edge(w[0], w[1])))
            .collect();
        let first_interior = self
            .paths
            .iter()
            .flat_map(|p| p[1..p.len() - 1].iter().copied())
            .min()
            .unwrap_or(self.n);
        let mut rotation: Vec<Vec<usize>> = self.rotation[..first_interior].to_vec();
        for (v, rot) in rotation.iter_mut().enumerate() {
            rot.retain(|&w| !path_edges.contains(&edge(v, w)));
        }
        ReductionInstance {
            n: first_interior,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !path_edges.contains(e))
                .collect(),
            rotation,
            params: self.params.clone(),
            gadgets: self.gadgets.clone(),
            verticals: self.verticals.clone(),
            paths: Vec::new(),
            u: self.u,
            v: self.v,
        }
    }
}
