//! Complete 2-hop graphs: a cycle plus every chord joining vertices at
//! distance two, and nothing else.

use crate::circular::{canonical_sequence, CircularOrder};
use crate::graph::Graph;
use crate::oracle::Oracle;

/// Whether `g` has exactly the outer edges and 2-hops of `seq`.
fn is_two_hop_order(g: &Graph, seq: &[usize]) -> bool {
    let n = seq.len();
    let expected = if n == 5 { 10 } else { 2 * n };
    g.m() == expected
        && (0..n)
            .all(|i| g.has_edge(seq[i], seq[(i + 1) % n]) && g.has_edge(seq[i], seq[(i + 2) % n]))
}

/// The cyclic orders produced by the seeding procedure, one per drawing
/// (an order and its reversal count once). `None` when `g` is not a
/// complete 2-hop graph.
///
/// For `n` in {4, 5} the complete 2-hop graph is `K_n`, and the single
/// candidate is the identity order.
pub fn complete_2hop_candidates(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n == 4 || n == 5 {
        return (g.m() == n * (n - 1) / 2).then(|| vec![(0..n).collect()]);
    }
    if n < 6 || (0..n).any(|v| g.degree(v) != 4) {
        return None;
    }
    let v1 = 0;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for &v2 in g.neighbors(v1) {
        for &v3 in g.neighbors(v2) {
            if v3 == v1 || !g.has_edge(v1, v3) {
                continue;
            }
            let Some(seq) = extend_seed(g, [v1, v2, v3]) else {
                continue;
            };
            if !is_two_hop_order(g, &seq) {
                continue;
            }
            let key = canonical_sequence(&seq);
            if !found.iter().any(|s| canonical_sequence(s) == key) {
                found.push(seq);
            }
        }
    }
    (!found.is_empty()).then_some(found)
}

/// Extends `v1, v2, v3` by repeatedly appending the unique unused vertex
/// adjacent to the last two.
fn extend_seed(g: &Graph, seed: [usize; 3]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut seq = seed.to_vec();
    for &v in &seed {
        used[v] = true;
    }
    while seq.len() < n {
        let (a, b) = (seq[seq.len() - 2], seq[seq.len() - 1]);
        let mut next = g
            .neighbors(b)
            .iter()
            .copied()
            .filter(|&x| !used[x] && g.has_edge(a, x));
        let v = next.next()?;
        if next.next().is_some() {
            return None;
        }
        used[v] = true;
        seq.push(v);
    }
    Some(seq)
}

/// The drawings of a complete 2-hop graph as sorted canonical orders, or
/// `None` if `g` is not one.
pub fn is_complete_2hop(g: &Graph) -> Option<Vec<CircularOrder>> {
    let candidates = complete_2hop_candidates(g)?;
    if g.n() <= 5 {
        return Some(
            Oracle::with_max_n(5)
                .labeled_embeddings(g)
                .expect("within bound"),
        );
    }
    let mut orders: Vec<CircularOrder> = candidates
        .iter()
        .map(|s| CircularOrder::from_vec_unchecked(canonical_sequence(s)))
        .collect();
    orders.sort();
    Some(orders)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cliques() {
        assert_eq!(is_complete_2hop(&Graph::complete(5)).unwrap().len(), 12);
        assert_eq!(
            complete_2hop_candidates(&Graph::complete(5)).unwrap().len(),
            1
        );
        assert!(is_complete_2hop(&Graph::complete(4)).is_some());
        let k5_minus = Graph::new(
            5,
            Graph::complete(5)
                .edges()
                .iter()
                .copied()
                .filter(|&e| e != (1, 3)),
        )
        .unwrap();
        assert!(is_complete_2hop(&k5_minus).is_none());
    }

    #[test]
    fn octahedron() {
        let g = Graph::complete_two_hop(6);
        let orders = is_complete_2hop(&g).unwrap();
        assert!(orders.contains(&CircularOrder::identity(6)));
        assert_eq!(orders, Oracle::default().labeled_embeddings(&g).unwrap());
    }

    #[test]
    fn longer_cycles_have_one_drawing() {
        for n in 7..=12 {
            let g = Graph::complete_two_hop(n);
            assert_eq!(
                is_complete_2hop(&g).unwrap(),
                vec![CircularOrder::identity(n)]
            );
        }
        let mut g = Graph::complete_two_hop(8);
        g = g.with_edge(0, 4).unwrap();
        assert!(is_complete_2hop(&g).is_none());
    }
}
