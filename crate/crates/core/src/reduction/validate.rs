//! Combinatorial validation of a witness drawing against the fixed
//! rotation system of an instance.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{ReductionInstance, WitnessDrawing};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    /// Two edges crossing `edge` have no common endpoint.
    FanViolation {
        edge: Edge,
        first: Edge,
        second: Edge,
    },
    /// Edges sharing an endpoint cross.
    IncidentCrossing {
        edge: Edge,
        other: Edge,
    },
    RepeatedCrossing {
        edge: Edge,
        other: Edge,
    },
    /// `other` is listed on `edge` but not the other way round.
    Asymmetric {
        edge: Edge,
        other: Edge,
    },
    /// The two lists disagree on the orientation of the crossing.
    OrientationMismatch {
        edge: Edge,
        other: Edge,
    },
    /// A 2-hop of a barrier gadget is crossed by an edge from outside it.
    BarrierCrossed {
        two_hop: Edge,
        gadget: usize,
        by: Edge,
    },
    /// The planarization with the fixed rotations is not a plane map.
    NotPlanar {
        vertices: usize,
        edges: usize,
        faces: usize,
        components: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub crossings: usize,
    pub violations: Vec<Violation>,
}

/// Whether two 4-cycles of ends are the same up to rotation.
fn same_cyclic(a: [usize; 4], b: [usize; 4]) -> bool {
    (0..4).any(|s| (0..4).all(|i| a[(i + s) % 4] == b[i]))
}

fn shares_endpoint(e: Edge, f: Edge) -> Option<usize> {
    [e.0, e.1].into_iter().find(|&x| x == f.0 || x == f.1)
}

/// Checks a witness: fan crossings, simple and mutually consistent
/// crossing lists, no barrier 2-hop crossed from outside its gadget, and a
/// plane planarization under the instance's rotation system.
pub fn validate_witness(inst: &ReductionInstance, w: &WitnessDrawing) -> Result<ValidationReport> {
    let g = inst.graph();
    for (v, rot) in inst.rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(Error::Input(format!(
                "rotation at vertex {v} is not a permutation of its neighbours"
            )));
        }
    }
    for (&e, list) in &w.crossings {
        if !g.has_edge(e.0, e.1) {
            return Err(Error::Input(format!(
                "witness lists crossings on non-edge {{{}, {}}}",
                e.0, e.1
            )));
        }
        if let Some(c) = list
            .iter()
            .find(|c| c[0] == c[1] || !g.has_edge(c[0], c[1]))
        {
            return Err(Error::Input(format!(
                "witness entry {{{}, {}}} is not an edge",
                c[0], c[1]
            )));
        }
    }

    let mut violations = Vec::new();
    let mut structural = false;
    for (&e, list) in &w.crossings {
        let others: Vec<Edge> = list.iter().map(|c| edge(c[0], c[1])).collect();
        let mut seen = BTreeSet::new();
        for (c, &f) in list.iter().zip(&others) {
            if !seen.insert(f) {
                violations.push(Violation::RepeatedCrossing { edge: e, other: f });
                structural = true;
                continue;
            }
            if shares_endpoint(e, f).is_some() {
                violations.push(Violation::IncidentCrossing { edge: e, other: f });
            }
            match w.crossed_by(f).iter().find(|d| edge(d[0], d[1]) == e) {
                None => {
                    violations.push(Violation::Asymmetric { edge: e, other: f });
                    structural = true;
                }
                Some(d) => {
                    if !same_cyclic([e.0, c[0], e.1, c[1]], [f.0, d[0], f.1, d[1]]) {
                        violations.push(Violation::OrientationMismatch { edge: e, other: f });
                        structural = true;
                    }
                }
            }
        }
        if let Some((first, second)) = fan_violation(&others) {
            violations.push(Violation::FanViolation {
                edge: e,
                first,
                second,
            });
        }
    }

    let mut owner: HashMap<Edge, usize> = HashMap::new();
    for (gi, gd) in inst.gadgets.iter().enumerate() {
        for e in gd.cycle_edges().into_iter().chain(gd.two_hops()) {
            owner.insert(e, gi);
        }
    }
    for (gi, gd) in inst.gadgets.iter().enumerate() {
        for h in gd.two_hops() {
            for c in w.crossed_by(h) {
                let f = edge(c[0], c[1]);
                if owner.get(&f) != Some(&gi) {
                    violations.push(Violation::BarrierCrossed {
                        two_hop: h,
                        gadget: gi,
                        by: f,
                    });
                }
            }
        }
    }

    if !structural {
        if let Some(v) = planarity_violation(inst, w) {
            violations.push(v);
        }
    }
    Ok(ValidationReport {
        valid: violations.is_empty(),
        crossings: w.crossing_count(),
        violations,
    })
}

/// The first pair of crossing edges that breaks the fan condition: two
/// independent edges if there are any, otherwise two edges of a triangle
/// of crossing edges without a common endpoint.
fn fan_violation(others: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &a) in others.iter().enumerate() {
        for &b in &others[i + 1..] {
            if shares_endpoint(a, b).is_none() {
                return Some((a, b));
            }
        }
    }
    let first = *others.first()?;
    let common = [first.0, first.1]
        .into_iter()
        .find(|&x| others.iter().all(|f| f.0 == x || f.1 == x));
    match common {
        Some(_) => None,
        None => Some((first, others[1])),
    }
}

/// Builds the planarization (one dummy vertex per crossing, rotations of
/// real vertices from the instance, of dummies from the entries) and
/// checks Euler's formula `V - E + F = 2C` face by face.
fn planarity_violation(inst: &ReductionInstance, w: &WitnessDrawing) -> Option<Violation> {
    let n = inst.n;
    let mut crossing_id: BTreeMap<(Edge, Edge), usize> = BTreeMap::new();
    for (&e, list) in &w.crossings {
        for c in list {
            let f = edge(c[0], c[1]);
            let key = (e.min(f), e.max(f));
            let next = n + crossing_id.len();
            crossing_id.entry(key).or_insert(next);
        }
    }
    let total = n + crossing_id.len();

    // Chain of nodes along every edge and the id of its first segment.
    let mut chain: HashMap<Edge, (Vec<usize>, usize)> = HashMap::new();
    let mut segments = 0;
    for &e in &inst.edges {
        let mut nodes = vec![e.0];
        for c in w.crossed_by(e) {
            let f = edge(c[0], c[1]);
            nodes.push(crossing_id[&(e.min(f), e.max(f))]);
        }
        nodes.push(e.1);
        let count = nodes.len() - 1;
        chain.insert(e, (nodes, segments));
        segments += count;
    }

    // Counterclockwise (neighbour, segment) lists.
    let mut rot: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    for (v, r) in inst.rotation.iter().enumerate() {
        for &x in r {
            let e = edge(v, x);
            let (nodes, base) = &chain[&e];
            let k = nodes.len() - 1;
            rot[v].push(if v == e.0 {
                (nodes[1], *base)
            } else {
                (nodes[k - 1], base + k - 1)
            });
        }
    }
    // Toward `end` along `e` from its `i`-th crossing.
    let toward = |e: Edge, i: usize, end: usize| {
        let (nodes, base) = &chain[&e];
        if end == e.0 {
            (nodes[i], base + i)
        } else {
            (nodes[i + 2], base + i + 1)
        }
    };
    for (&(e, f), &x) in &crossing_id {
        let list_e = w.crossed_by(e);
        let i = list_e
            .iter()
            .position(|c| edge(c[0], c[1]) == f)
            .expect("symmetric lists");
        let j = w
            .crossed_by(f)
            .iter()
            .position(|c| edge(c[0], c[1]) == e)
            .expect("symmetric lists");
        let c = list_e[i];
        rot[x] = vec![
            toward(e, i, e.0),
            toward(f, j, c[0]),
            toward(e, i, e.1),
            toward(f, j, c[1]),
        ];
    }

    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, r) in rot.iter().enumerate() {
        for (i, &(_, s)) in r.iter().enumerate() {
            index.insert((v, s), i);
        }
    }
    let mut visited: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0;
    for v in 0..total {
        for i in 0..rot[v].len() {
            if visited[v][i] {
                continue;
            }
            faces += 1;
            let (mut x, mut k) = (v, i);
            while !visited[x][k] {
                visited[x][k] = true;
                let (y, s) = rot[x][k];
                let d = rot[y].len();
                k = (index[&(y, s)] + d - 1) % d;
                x = y;
            }
        }
    }
    let isolated = rot.iter().filter(|r| r.is_empty()).count();
    faces += isolated;

    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (v, r) in rot.iter().enumerate() {
        for &(y, _) in r {
            let (a, b) = (find(&mut parent, v), find(&mut parent, y));
            parent[a] = b;
        }
    }
    let components = (0..total).filter(|&x| find(&mut parent, x) == x).count();
    let euler = total as i64 - segments as i64 + faces as i64;
    (euler != 2 * components as i64).then_some(Violation::NotPlanar {
        vertices: total,
        edges: segments,
        faces,
        components,
    })
}
