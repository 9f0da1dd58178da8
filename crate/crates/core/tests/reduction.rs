//! End-to-end reduction checks: generation, routing and validation.

use outerfan::reduction::{
    barrier_witness, gen_instance, partition_from_values, route_witness, validate_witness,
    EdgeRole, ThreePartitionInstance, Violation,
};
use outerfan::{edge, Error};

fn reference() -> ThreePartitionInstance {
    ThreePartitionInstance::new(3, vec![7, 7, 7, 8, 8, 8, 8, 9, 10], 24).unwrap()
}

#[test]
fn central_cells_carry_the_input_values() {
    let tp = reference();
    let inst = gen_instance(&tp).unwrap();
    let central: Vec<usize> = (0..9)
        .map(|c| {
            inst.verticals
                .iter()
                .filter(|v| v.column == c && v.cell == 2)
                .count()
        })
        .collect();
    assert_eq!(central, vec![7, 7, 7, 8, 8, 8, 8, 9, 10]);
    let roles = inst.edge_roles();
    assert_eq!(roles.len(), inst.edges.len());
    let path_edges = roles
        .values()
        .filter(|r| matches!(r, EdgeRole::Path { .. }))
        .count();
    assert_eq!(path_edges, 3 * 102);
    // Generation is deterministic.
    assert_eq!(gen_instance(&tp).unwrap(), inst);
}

#[test]
fn every_path_edge_crosses_one_vertical() {
    let tp = reference();
    let inst = gen_instance(&tp).unwrap();
    let w = route_witness(
        &inst,
        &partition_from_values(&tp, &[[7, 7, 10], [7, 8, 9], [8, 8, 8]]).unwrap(),
    )
    .unwrap();
    let roles = inst.edge_roles();
    for p in &inst.paths {
        for e in p.windows(2) {
            let list = w.crossed_by(edge(e[0], e[1]));
            assert_eq!(list.len(), 1);
            assert!(matches!(
                roles[&edge(list[0][0], list[0][1])],
                EdgeRole::Vertical { .. }
            ));
        }
    }
    // Only 2-hops and crossed verticals appear besides path edges.
    for (e, list) in &w.crossings {
        match roles[e] {
            EdgeRole::GadgetCycle { .. } => panic!("cycle edge {e:?} is crossed"),
            EdgeRole::Vertical { .. } => assert!(list.len() <= 1),
            _ => {}
        }
    }
    // Each central cell is crossed by exactly one path.
    for vt in inst.verticals.iter().filter(|v| v.cell == 2) {
        assert_eq!(w.crossed_by(edge(vt.upper, vt.lower)).len(), 1);
    }
}

#[test]
fn path_edges_crossing_each_other_break_the_fan_condition() {
    let tp = reference();
    let inst = gen_instance(&tp).unwrap();
    let mut w = route_witness(
        &inst,
        &partition_from_values(&tp, &[[7, 7, 10], [7, 8, 9], [8, 8, 8]]).unwrap(),
    )
    .unwrap();
    let a = edge(inst.paths[0][40], inst.paths[0][41]);
    let b = edge(inst.paths[1][40], inst.paths[1][41]);
    w.add_crossing(a, b);
    let report = validate_witness(&inst, &w).unwrap();
    assert!(!report.valid);
    assert!(report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::FanViolation { edge, .. } if *edge == a || *edge == b)));
}

#[test]
fn barrier_only_witness_without_paths() {
    let inst = gen_instance(&reference()).unwrap().without_paths();
    assert!(inst.paths.is_empty());
    let report = validate_witness(&inst, &barrier_witness(&inst)).unwrap();
    assert!(report.valid);
    let gadget_edges: usize = inst.gadgets.iter().map(|g| 2 * g.cycle.len()).sum();
    assert_eq!(inst.edges.len(), gadget_edges + inst.verticals.len());
}

#[test]
fn dangling_references_are_input_errors() {
    let tp = reference();
    let inst = gen_instance(&tp).unwrap();
    let mut w = barrier_witness(&inst);
    w.add_crossing((inst.n, inst.n + 1), (0, 1));
    assert!(matches!(validate_witness(&inst, &w), Err(Error::Input(_))));
    assert!(matches!(
        ThreePartitionInstance::new(3, vec![7, 7, 7, 8, 8, 8, 8, 12, 7], 24),
        Err(Error::Input(_))
    ));
}
