//! Graph automorphisms and the reduction of embedding sets to one
//! representative per class of drawings that differ only by a symmetry of
//! the graph.

use std::collections::BTreeSet;

use crate::circular::{canonical_sequence, CircularOrder};
use crate::graph::Graph;

/// Upper bound on the automorphisms enumerated before giving up.
pub const AUTOMORPHISM_CAP: usize = 200_000;

/// All automorphisms of `g` as vertex maps, or `None` if there are more
/// than `cap`. Plain backtracking with degree and adjacency pruning.
pub fn automorphisms(g: &Graph, cap: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    if extend(g, 0, &mut image, &mut used, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> bool {
    let n = g.n();
    if v == n {
        out.push(image.to_vec());
        return out.len() <= cap;
    }
    for w in 0..n {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        let ok = extend(g, v + 1, image, used, out, cap);
        used[w] = false;
        image[v] = usize::MAX;
        if !ok {
            return false;
        }
    }
    true
}

/// Maps every order to the least canonical sequence in its orbit under the
/// automorphisms of `g`, and returns the distinct representatives sorted.
/// When the automorphism group is too large to enumerate, falls back to
/// plain rotation/reflection canonical forms.
pub fn reduce_orders<'a, I>(g: &Graph, orders: I) -> Vec<CircularOrder>
where
    I: IntoIterator<Item = &'a CircularOrder>,
{
    let autos = automorphisms(g, AUTOMORPHISM_CAP);
    let mut reps = BTreeSet::new();
    for ord in orders {
        let rep = match &autos {
            Some(list) => list
                .iter()
                .map(|pi| {
                    canonical_sequence(&ord.as_slice().iter().map(|&v| pi[v]).collect::<Vec<_>>())
                })
                .min()
                .expect("identity is always an automorphism"),
            None => canonical_sequence(ord.as_slice()),
        };
        reps.insert(rep);
    }
    reps.into_iter()
        .map(CircularOrder::from_vec_unchecked)
        .collect()
}
