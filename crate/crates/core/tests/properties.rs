//! Property-based invariants across modules; expected values come from the
//! exhaustive oracle or from independent recomputation.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use outerfan::oracle::Oracle;
use outerfan::recognizer::recognize;
use outerfan::reduction::{
    gen_instance, route_witness, validate_witness, ThreePartitionInstance, Violation,
    WitnessDrawing,
};
use outerfan::spqr::build_spqr;
use outerfan::sweep::random_biconnected;
use outerfan::{check_outer_fan_planar, CircularOrder, EdgeClass, Graph};

/// A 3-Partition input with a known solution: `m` triples in `(B/4, B/2)`
/// summing to `B`, shuffled. Returns the input and the index triples.
fn solvable_input(m: usize, b: u64, seed: u64) -> (ThreePartitionInstance, Vec<[usize; 3]>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (b / 4 + 1, (b - 1) / 2);
    let mut values = Vec::new();
    while values.len() < 3 * m {
        let x = rng.gen_range(lo..=hi);
        let y = rng.gen_range(lo..=hi);
        let Some(z) = b.checked_sub(x + y) else {
            continue;
        };
        if (lo..=hi).contains(&z) {
            values.extend([x, y, z]);
        }
    }
    let mut perm: Vec<usize> = (0..3 * m).collect();
    perm.shuffle(&mut rng);
    let mut a = vec![0; 3 * m];
    for (from, &to) in perm.iter().enumerate() {
        a[to] = values[from];
    }
    let partition = (0..m)
        .map(|j| [perm[3 * j], perm[3 * j + 1], perm[3 * j + 2]])
        .collect();
    (
        ThreePartitionInstance::new(m, a, b).expect("valid by construction"),
        partition,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_follows_cyclic_distance(seed in any::<u64>(), n in 3usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(&mut rng);
        let ord = CircularOrder::new(seq.clone()).unwrap();
        let pos = ord.positions();
        for u in 0..n {
            for v in u + 1..n {
                let d = (pos[u] + n - pos[v]) % n;
                let d = d.min(n - d);
                let expected = match d { 1 => EdgeClass::Outer, 2 => EdgeClass::TwoHop, _ => EdgeClass::Long };
                prop_assert_eq!(ord.classify_edge((u, v)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn recognizer_matches_oracle(seed in any::<u64>(), n in 3usize..8) {
        let g = random_biconnected(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let oracle = Oracle::default();
        let out = recognize(&g);
        prop_assert_eq!(out.is_accepted(), oracle.maximal_outer_fan_planar(&g).unwrap());
        if out.is_accepted() {
            prop_assert_eq!(&out.orders, &oracle.labeled_embeddings(&g).unwrap());
            for ord in out.orders.iter().chain(&out.embeddings) {
                prop_assert!(check_outer_fan_planar(&g, ord).outer_fan_planar);
            }
            prop_assert!(!out.embeddings.is_empty() && out.embeddings.len() <= out.orders.len());
        }
    }

    #[test]
    fn spqr_round_trip(seed in any::<u64>(), n in 3usize..11) {
        let g = random_biconnected(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let tree = build_spqr(&g).unwrap();
        prop_assert!(tree.validate(&g).is_ok());
        prop_assert_eq!(tree.reconstruct().unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_the_verdict(seed in any::<u64>(), n in 4usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_biconnected(n, &mut rng);
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(&mut rng);
        let h = Graph::new(n, g.edges().iter().map(|&(u, v)| (labels[u], labels[v]))).unwrap();
        let (a, b) = (recognize(&g), recognize(&h));
        prop_assert_eq!(a.is_accepted(), b.is_accepted());
        prop_assert_eq!(a.embeddings.len(), b.embeddings.len());
        prop_assert_eq!(a.orders.len(), b.orders.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn routed_witnesses_validate(seed in any::<u64>(), m in 2usize..4, b in 10u64..30) {
        let (tp, partition) = solvable_input(m, b, seed);
        let inst = gen_instance(&tp).unwrap();
        prop_assert_eq!(inst.gadgets[0].cycle.len(), 3 * m * tp.k());
        prop_assert!(inst.paths.iter().all(|p| p.len() == (3 * m - 3) * tp.k() + b as usize + 1));
        let w = route_witness(&inst, &partition).unwrap();
        let report = validate_witness(&inst, &w).unwrap();
        prop_assert!(report.valid, "{:?}", report.violations);
    }

    #[test]
    fn gadgets_are_cycles_with_their_two_hops(seed in any::<u64>(), b in 10u64..24) {
        let (tp, _) = solvable_input(2, b, seed);
        let inst = gen_instance(&tp).unwrap();
        let g = inst.graph();
        for gadget in &inst.gadgets {
            let (sub, map) = g.induced(&gadget.cycle);
            let mut expected: Vec<(usize, usize)> = gadget.cycle_edges().into_iter().chain(gadget.two_hops()).collect();
            expected.sort();
            let mut got: Vec<(usize, usize)> =
                sub.edges().iter().map(|&(x, y)| outerfan::edge(map[x], map[y])).collect();
            got.sort();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn dropped_entries_are_reported(seed in any::<u64>()) {
        let (tp, partition) = solvable_input(2, 14, seed);
        let inst = gen_instance(&tp).unwrap();
        let w = route_witness(&inst, &partition).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let keys: Vec<_> = w.crossings.keys().copied().collect();
        let e = *keys.choose(&mut rng).unwrap();
        let mut bad: WitnessDrawing = w.clone();
        let removed = bad.crossings.get_mut(&e).unwrap().remove(0);
        let report = validate_witness(&inst, &bad).unwrap();
        let other = outerfan::edge(removed[0], removed[1]);
        let found = report.violations.iter().any(
            |v| matches!(v, Violation::Asymmetric { edge, other: o } if *edge == other && *o == e),
        );
        prop_assert!(found);
    }
}
