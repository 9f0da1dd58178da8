//! Porous outer edges: room to attach a new vertex next to an outer edge.

use crate::circular::{is_fan_planar_at, CircularOrder};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Whether `outer_edge = {around, w}` is porous around `around` in one of
/// the `drawings`: a new vertex placed on the circle between the two
/// endpoints, joined to the circle neighbour of `around` on the far side,
/// keeps the drawing outer-fan-planar.
pub fn is_porous(
    skel: &Graph,
    drawings: &[CircularOrder],
    outer_edge: Edge,
    around: usize,
) -> Result<bool> {
    let (a, b) = outer_edge;
    if around != a && around != b {
        return Err(Error::Structural(format!(
            "vertex {around} is not an endpoint of {{{a}, {b}}}"
        )));
    }
    let other = if around == a { b } else { a };
    let n = skel.n();
    let mut edges: Vec<Edge> = skel.edges().to_vec();
    edges.push((0, 0));
    let last = edges.len() - 1;
    for d in drawings {
        let (p, q) = d.circle_neighbors(around);
        let far = if p == other {
            q
        } else if q == other {
            p
        } else {
            return Err(Error::Structural(format!(
                "{{{a}, {b}}} is not an outer edge of {d}"
            )));
        };
        // Positions on a circle of n + 1 slots, the new vertex `n` sitting
        // right after `around` or `other`, whichever comes first.
        let seq = d.as_slice();
        let i = seq
            .iter()
            .position(|&x| x == around)
            .expect("vertex in order");
        let j = seq
            .iter()
            .position(|&x| x == other)
            .expect("vertex in order");
        let gap = if (i + 1) % n == j { i } else { j };
        let mut pos = vec![0; n + 1];
        for (k, &x) in seq.iter().enumerate() {
            pos[x] = if k <= gap { k } else { k + 1 };
        }
        pos[n] = gap + 1;
        edges[last] = edge(n, far);
        if is_fan_planar_at(&edges, &pos) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn all_drawings(g: &Graph) -> Vec<CircularOrder> {
        Oracle::default().labeled_embeddings(g).unwrap()
    }

    #[test]
    fn triangle_and_k4_edges_are_porous() {
        let tri = Graph::complete(3);
        for &(u, v) in tri.edges() {
            assert!(is_porous(&tri, &all_drawings(&tri), (u, v), u).unwrap());
            assert!(is_porous(&tri, &all_drawings(&tri), (u, v), v).unwrap());
        }
        let k4 = Graph::complete(4);
        let identity = [CircularOrder::identity(4)];
        for i in 0..4 {
            let e = edge(i, (i + 1) % 4);
            assert!(is_porous(&k4, &identity, e, e.0).unwrap());
            assert!(is_porous(&k4, &identity, e, e.1).unwrap());
        }
    }

    #[test]
    fn k5_outer_edges_are_not_porous() {
        // Every vertex of K5 already has a 2-hop crossed by two edges, so a
        // further edge to the far neighbour meets independent crossings.
        let k5 = Graph::complete(5);
        let identity = [CircularOrder::identity(5)];
        assert!(!is_porous(&k5, &identity, (0, 1), 0).unwrap());
        assert!(!is_porous(&k5, &identity, (0, 1), 1).unwrap());
    }

    #[test]
    fn rejects_bad_arguments() {
        let k4 = Graph::complete(4);
        let identity = [CircularOrder::identity(4)];
        assert!(is_porous(&k4, &identity, (0, 2), 0).is_err());
        assert!(is_porous(&k4, &identity, (0, 1), 3).is_err());
    }
}
