//! Witness drawings: per-edge crossing lists with orientation, the
//! routing of the transversal paths from a 3-Partition solution, and
//! helpers that inject single violations into a valid witness.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{EdgeRole, ReductionInstance, ThreePartitionInstance};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge};

/// For every edge `e = (a, b)` with `a < b`, the edges crossing it in order
/// from `a` to `b`. An entry `[c, d]` stands for the edge `{c, d}` and says
/// that the four ends around the crossing read `a, c, b, d`
/// counterclockwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "WitnessJson", into = "WitnessJson")]
pub struct WitnessDrawing {
    pub crossings: BTreeMap<Edge, Vec<[usize; 2]>>,
}

#[derive(Serialize, Deserialize)]
struct CrossingList {
    edge: [usize; 2],
    crossed_by: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    crossings: Vec<CrossingList>,
}

impl From<WitnessJson> for WitnessDrawing {
    fn from(j: WitnessJson) -> Self {
        let mut w = WitnessDrawing::default();
        for c in j.crossings {
            w.crossings
                .entry(edge(c.edge[0], c.edge[1]))
                .or_default()
                .extend(c.crossed_by);
        }
        w
    }
}

impl From<WitnessDrawing> for WitnessJson {
    fn from(w: WitnessDrawing) -> Self {
        WitnessJson {
            crossings: w
                .crossings
                .into_iter()
                .filter(|(_, list)| !list.is_empty())
                .map(|((a, b), crossed_by)| CrossingList {
                    edge: [a, b],
                    crossed_by,
                })
                .collect(),
        }
    }
}

/// Entry for the edge `{q[0], q[2]}` when the ends `q` read
/// counterclockwise around the crossing with `{q[1], q[3]}`.
fn entry(q: [usize; 4]) -> [usize; 2] {
    if q[0] < q[2] {
        [q[1], q[3]]
    } else {
        [q[3], q[1]]
    }
}

impl WitnessDrawing {
    pub fn crossed_by(&self, e: Edge) -> &[[usize; 2]] {
        self.crossings
            .get(&edge(e.0, e.1))
            .map_or(&[], |v| v.as_slice())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.values().map(Vec::len).sum::<usize>() / 2
    }

    /// Appends a crossing of `e` and `f` at the end of both lists, with a
    /// consistent orientation.
    pub fn add_crossing(&mut self, e: Edge, f: Edge) {
        let (e, f) = (edge(e.0, e.1), edge(f.0, f.1));
        self.crossings.entry(e).or_default().push([f.0, f.1]);
        self.crossings.entry(f).or_default().push([e.1, e.0]);
    }
}

/// The crossings inside the barrier gadgets alone: every 2-hop
/// `(c_i, c_{i+2})` is crossed by `(c_{i-1}, c_{i+1})` near `c_i` and by
/// `(c_{i+1}, c_{i+3})` near `c_{i+2}`.
pub fn barrier_witness(inst: &ReductionInstance) -> WitnessDrawing {
    let mut w = WitnessDrawing::default();
    for g in &inst.gadgets {
        let c = &g.cycle;
        let k = c.len();
        let at = |i: usize| c[i % k];
        for i in 0..k {
            let near_start = entry([at(i), at(i + 1), at(i + 2), at(i + k - 1)]);
            let near_end = entry([at(i), at(i + 1), at(i + 2), at(i + 3)]);
            let mut list = vec![near_start, near_end];
            if at(i) > at(i + 2) {
                list.reverse();
            }
            w.crossings.insert(edge(at(i), at(i + 2)), list);
        }
    }
    w
}

fn check_partition(tp: &ThreePartitionInstance, partition: &[[usize; 3]]) -> Result<Vec<usize>> {
    let fail = |msg: String| Err(Error::Input(msg));
    if partition.len() != tp.m {
        return fail(format!(
            "partition has {} triples but m = {}",
            partition.len(),
            tp.m
        ));
    }
    let mut group = vec![usize::MAX; 3 * tp.m];
    for (j, t) in partition.iter().enumerate() {
        for &i in t {
            if i >= group.len() {
                return fail(format!("index {i} is out of range"));
            }
            if group[i] != usize::MAX {
                return fail(format!("index {i} is used twice"));
            }
            group[i] = j;
        }
        let sum: u64 = t.iter().map(|&i| tp.a[i]).sum();
        if sum != tp.b {
            return fail(format!("triple {j} sums to {sum}, not B = {}", tp.b));
        }
    }
    Ok(group)
}

/// Converts triples of values into triples of indices. Columns are taken
/// left to right; each goes to the lowest-index triple that still holds an
/// unused copy of its value.
pub fn partition_from_values(
    tp: &ThreePartitionInstance,
    triples: &[[u64; 3]],
) -> Result<Vec<[usize; 3]>> {
    if triples.len() != tp.m {
        return Err(Error::Input(format!(
            "partition has {} triples but m = {}",
            triples.len(),
            tp.m
        )));
    }
    let mut remaining: Vec<Vec<u64>> = triples.iter().map(|t| t.to_vec()).collect();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); tp.m];
    for (i, &x) in tp.a.iter().enumerate() {
        let j = remaining
            .iter()
            .position(|r| r.contains(&x))
            .ok_or_else(|| Error::Input(format!("no triple has an unused copy of a_{i} = {x}")))?;
        let p = remaining[j]
            .iter()
            .position(|&y| y == x)
            .expect("value present");
        remaining[j].swap_remove(p);
        out[j].push(i);
    }
    Ok(out.into_iter().map(|t| [t[0], t[1], t[2]]).collect())
}

/// Routes the transversal paths for a solution given as index triples and
/// returns the full witness. Path `j` passes the central cell of exactly
/// the columns in triple `j`; in every other column it keeps its vertical
/// offset to the path that does, and its `e`-th edge crosses the `e`-th
/// vertical it meets.
pub fn route_witness(inst: &ReductionInstance, partition: &[[usize; 3]]) -> Result<WitnessDrawing> {
    let tp = inst.three_partition();
    let group = check_partition(&tp, partition)?;
    let m = tp.m;
    let mut cells: Vec<Vec<Vec<Edge>>> = vec![vec![Vec::new(); 2 * m - 1]; 3 * m];
    for vt in &inst.verticals {
        cells[vt.column][vt.cell].push((vt.upper, vt.lower));
    }
    let mut w = barrier_witness(inst);
    for (j, path) in inst.paths.iter().enumerate() {
        let crossed: Vec<Edge> = (0..3 * m)
            .flat_map(|i| cells[i][m - 1 + j - group[i]].iter().copied())
            .collect();
        if crossed.len() + 1 != path.len() {
            return Err(Error::Structural(format!(
                "path {j} has {} edges but meets {} verticals",
                path.len() - 1,
                crossed.len()
            )));
        }
        for (e, &(up, down)) in crossed.iter().enumerate() {
            let (west, east) = (path[e], path[e + 1]);
            w.crossings
                .entry(edge(west, east))
                .or_default()
                .push(entry([east, up, west, down]));
            w.crossings
                .entry(edge(up, down))
                .or_default()
                .push(entry([up, west, down, east]));
        }
    }
    Ok(w)
}

/// A violation planted into a witness: `target` is the edge whose list
/// should be reported, `with` the edge that now crosses it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Injection {
    pub target: Edge,
    pub with: Edge,
}

fn free_edges(inst: &ReductionInstance) -> Vec<Edge> {
    inst.edge_roles()
        .into_iter()
        .filter(|(_, r)| matches!(r, EdgeRole::Vertical { .. } | EdgeRole::Path { .. }))
        .map(|(e, _)| e)
        .collect()
}

fn independent(e: Edge, f: Edge) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

/// Makes a crossed vertical also cross a second edge independent of its
/// current crossing edge, so that two independent edges cross it.
pub fn inject_pattern_one<R: Rng>(
    inst: &ReductionInstance,
    w: &WitnessDrawing,
    rng: &mut R,
) -> Option<(WitnessDrawing, Injection)> {
    let crossed: Vec<(Edge, Edge)> = inst
        .verticals
        .iter()
        .map(|vt| edge(vt.upper, vt.lower))
        .filter_map(|e| w.crossed_by(e).first().map(|c| (e, edge(c[0], c[1]))))
        .collect();
    let &(target, existing) = crossed.choose(rng)?;
    let pool = free_edges(inst);
    let with = *pool
        .iter()
        .filter(|&&f| f != existing && independent(f, target) && independent(f, existing))
        .collect::<Vec<_>>()
        .choose(rng)?;
    let mut out = w.clone();
    out.add_crossing(target, *with);
    Some((
        out,
        Injection {
            target,
            with: *with,
        },
    ))
}

/// Makes a 2-hop of a random barrier gadget cross a vertical or path edge.
pub fn inject_barrier_crossing<R: Rng>(
    inst: &ReductionInstance,
    w: &WitnessDrawing,
    rng: &mut R,
) -> Option<(WitnessDrawing, Injection)> {
    let gadget = inst.gadgets.choose(rng)?;
    let target = *gadget.two_hops().choose(rng)?;
    let pool = free_edges(inst);
    let with = **pool
        .iter()
        .filter(|&&f| independent(f, target))
        .collect::<Vec<_>>()
        .choose(rng)?;
    let mut out = w.clone();
    out.add_crossing(target, with);
    Some((out, Injection { target, with }))
}
