//! Instance generation: vertex layout, gadgets, verticals, paths and the
//! rotation system.

use std::collections::BTreeSet;

use super::{Gadget, GadgetKind, Params, ReductionInstance, ThreePartitionInstance, Vertical};
use crate::error::Result;
use crate::graph::{edge, Edge};

const TL: usize = 0;
const L1: usize = 1;
const U: usize = 2;
const L3: usize = 3;
const BL: usize = 4;
const TR: usize = 5;
const R1: usize = 6;
const V: usize = 7;
const R3: usize = 8;
const BR: usize = 9;

/// Gadget neighbours of `cycle[i]` in counterclockwise order: the next
/// vertex, the next 2-hop, the previous 2-hop, the previous vertex.
fn part(cycle: &[usize], i: usize) -> [usize; 4] {
    let k = cycle.len();
    [
        cycle[(i + 1) % k],
        cycle[(i + 2) % k],
        cycle[(i + k - 2) % k],
        cycle[(i + k - 1) % k],
    ]
}

/// Builds the instance for `tp`.
///
/// Vertex ids: the walls are `TL, l1, u, l3, BL` (0..5) and
/// `TR, r1, v, r3, BR` (5..10); then the interiors of the top and bottom
/// beams, the floors column by column (top to bottom, each in cycle
/// order) and the interiors of the paths.
pub fn gen_instance(tp: &ThreePartitionInstance) -> Result<ReductionInstance> {
    tp.validate()?;
    let m = tp.m;
    let k = tp.k();
    let l = tp.beam_length();
    let cols = 3 * m;
    let cells = 2 * m - 1;
    let mut next = 10;
    let mut fresh = |count: usize| {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        ids
    };

    // Top beam left to right; bottom beam right to left.
    let mut top = vec![TL];
    top.extend(fresh(l - 2));
    top.push(TR);
    let mut bottom = vec![BR];
    bottom.extend(fresh(l - 2));
    bottom.push(BL);

    let mut gadgets = vec![
        Gadget {
            kind: GadgetKind::TopBeam,
            cycle: top.clone(),
        },
        Gadget {
            kind: GadgetKind::RightWall,
            cycle: vec![TR, R1, V, R3, BR],
        },
        Gadget {
            kind: GadgetKind::BottomBeam,
            cycle: bottom.clone(),
        },
        Gadget {
            kind: GadgetKind::LeftWall,
            cycle: vec![BL, L3, U, L1, TL],
        },
    ];

    // Endpoints of the verticals of every cell, left to right.
    let mut upper: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); cells]; cols];
    let mut lower: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); cells]; cols];
    for c in 0..cols {
        upper[c][0] = top[c * k..c * k + k].to_vec();
        lower[c][cells - 1] = (0..k).map(|i| bottom[l - 1 - c * k - i]).collect();
        for f in 0..cells - 1 {
            let c1 = tp.cell_size(c, f);
            let c2 = tp.cell_size(c, f + 1);
            let cycle = fresh(c1 + c2 - 2);
            let size = cycle.len();
            let mut roof = vec![cycle[0]];
            roof.extend((c2 - 1..size).rev().map(|i| cycle[i]));
            lower[c][f] = roof;
            upper[c][f + 1] = cycle[..c2].to_vec();
            gadgets.push(Gadget {
                kind: GadgetKind::Floor {
                    column: c,
                    floor: f,
                },
                cycle,
            });
        }
    }

    let mut verticals = Vec::new();
    for c in 0..cols {
        for cell in 0..cells {
            for (index, (&a, &b)) in upper[c][cell].iter().zip(&lower[c][cell]).enumerate() {
                verticals.push(Vertical {
                    column: c,
                    cell,
                    index,
                    upper: a,
                    lower: b,
                });
            }
        }
    }

    let len = tp.path_length();
    let paths: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let mut p = vec![U];
            p.extend(fresh(len - 1));
            p.push(V);
            p
        })
        .collect();
    let n = next;
    let mut down: Vec<Option<usize>> = vec![None; n];
    let mut up: Vec<Option<usize>> = vec![None; n];
    for vt in &verticals {
        down[vt.upper] = Some(vt.lower);
        up[vt.lower] = Some(vt.upper);
    }

    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let ext = |x: Option<usize>| x.into_iter();
    for g in &gadgets {
        let cyc = &g.cycle;
        for (i, &x) in cyc.iter().enumerate() {
            if x < 10 {
                continue;
            }
            let mut rot = part(cyc, i).to_vec();
            match g.kind {
                // The right corner of a floor sees its lower vertical first.
                GadgetKind::Floor { column, floor } if i == upper[column][floor + 1].len() - 1 => {
                    rot.extend(ext(down[x]).chain(ext(up[x])));
                }
                _ => rot.extend(ext(up[x]).chain(ext(down[x]))),
            }
            rotation[x] = rot;
        }
    }
    let left = &gadgets[3].cycle;
    let right = &gadgets[1].cycle;
    let at = |cyc: &[usize], x: usize| {
        part(
            cyc,
            cyc.iter().position(|&y| y == x).expect("vertex on cycle"),
        )
    };
    let join = |a: [usize; 4], mid: Option<usize>, b: [usize; 4]| -> Vec<usize> {
        a.into_iter().chain(mid).chain(b).collect()
    };
    rotation[TL] = join(at(left, TL), down[TL], at(&top, TL));
    rotation[TR] = join(at(&top, TR), down[TR], at(right, TR));
    rotation[BL] = join(at(&bottom, BL), up[BL], at(left, BL));
    rotation[BR] = join(at(right, BR), up[BR], at(&bottom, BR));
    for x in [L1, L3] {
        rotation[x] = at(left, x).to_vec();
    }
    for x in [R1, R3] {
        rotation[x] = at(right, x).to_vec();
    }
    // Paths leave u bottom first and reach v top first (counterclockwise).
    rotation[U] = at(left, U)
        .into_iter()
        .chain(paths.iter().rev().map(|p| p[1]))
        .collect();
    rotation[V] = at(right, V)
        .into_iter()
        .chain(paths.iter().map(|p| p[p.len() - 2]))
        .collect();
    for p in &paths {
        for i in 1..p.len() - 1 {
            rotation[p[i]] = vec![p[i - 1], p[i + 1]];
        }
    }

    let edges: BTreeSet<Edge> = rotation
        .iter()
        .enumerate()
        .flat_map(|(x, rot)| rot.iter().map(move |&y| edge(x, y)))
        .collect();
    Ok(ReductionInstance {
        n,
        edges: edges.into_iter().collect(),
        rotation,
        params: Params {
            m,
            b: tp.b,
            k,
            a: tp.a.clone(),
        },
        gadgets,
        verticals,
        paths,
        u: U,
        v: V,
    })
}
