//! Exit-code contract and JSON round trips of the `outerfan` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use outerfan::reduction::{ReductionInstance, ValidationReport, WitnessDrawing};
use outerfan::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_outerfan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, g.to_edge_list()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn recognize_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_graph(dir.path(), "k5.txt", &Graph::complete(5));
    let svg = dir.path().join("k5.svg");
    let out = run(&[
        "recognize",
        &k5,
        "--oracle",
        "--svg",
        svg.to_str().unwrap(),
        "--emit-embeddings",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["verdict"]["kind"], "Accepted");
    assert_eq!(report["embeddings"].as_array().unwrap().len(), 1);
    assert_eq!(report["oracle"]["agrees"], true);
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));

    let p3 = write_graph(dir.path(), "p3.txt", &Graph::path(3));
    let out = run(&["recognize", &p3]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["verdict"]["kind"], "RejectedNotBiconnected");

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 2\na b c\n").unwrap();
    let out = run(&["recognize", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(code(&run(&["recognize", "/nonexistent/graph.txt"])), 2);
}

#[test]
fn recognize_with_required_outer_edges() {
    let dir = tempfile::tempdir().unwrap();
    let oct = write_graph(dir.path(), "oct.txt", &Graph::complete_two_hop(6));
    // In the octahedron's drawings every edge is outer in some drawing.
    assert_eq!(code(&run(&["recognize", &oct, "--outer-edges", "0-1"])), 0);
    assert_eq!(code(&run(&["recognize", &oct, "--outer-edges", "0-9"])), 2);
    assert_eq!(code(&run(&["recognize", &oct, "--outer-edges", "zero"])), 2);
    let c6 = write_graph(dir.path(), "c6.txt", &Graph::cycle(6));
    assert_eq!(code(&run(&["recognize", &c6, "--outer-edges", "0-1"])), 2);
}

#[test]
fn oracle_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = write_graph(dir.path(), "k6.txt", &Graph::complete(6));
    let out = run(&["oracle", &k6]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["outer_fan_planar"], false);

    let c7 = write_graph(dir.path(), "c7.txt", &Graph::cycle(7));
    let report = json(&run(&["oracle", &c7]));
    assert_eq!(report["outer_fan_planar"], true);
    assert_eq!(report["maximal"], false);

    let c13 = write_graph(dir.path(), "c13.txt", &Graph::cycle(13));
    assert_eq!(code(&run(&["oracle", &c13])), 2);
    assert_eq!(code(&run(&["oracle", &c7, "--max-n", "6"])), 2);
}

#[test]
fn reduction_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let inst_path = dir.path().join("instance.json");
    let w_path = dir.path().join("witness.json");
    let (inst_s, w_s) = (inst_path.to_str().unwrap(), w_path.to_str().unwrap());

    let out = run(&[
        "gen-3p",
        "--m",
        "3",
        "--B",
        "24",
        "--A",
        "7,7,7,8,8,8,8,9,10",
        "-o",
        inst_s,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["K"], 13);
    let text = fs::read_to_string(&inst_path).unwrap();
    let inst: ReductionInstance = serde_json::from_str(&text).unwrap();
    assert_eq!(inst.params.k, 13);
    assert_eq!(serde_json::to_string_pretty(&inst).unwrap(), text);

    let out = run(&[
        "route-witness",
        "--instance",
        inst_s,
        "--partition",
        "7,7,10;7,8,9;8,8,8",
        "-o",
        w_s,
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify-witness", "--instance", inst_s, "--witness", w_s]);
    assert_eq!(code(&out), 0);
    let report: ValidationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.valid);

    // Same solution as indices.
    let out = run(&[
        "route-witness",
        "--instance",
        inst_s,
        "--partition",
        "0,1,8;2,3,7;4,5,6",
        "--indices",
    ]);
    assert_eq!(code(&out), 0);

    // Tampered witness: a path edge now also crosses a gadget 2-hop.
    let mut w: WitnessDrawing =
        serde_json::from_str(&fs::read_to_string(&w_path).unwrap()).unwrap();
    let hop = inst.gadgets[0].two_hops()[3];
    let path_edge = (inst.paths[1][10], inst.paths[1][11]);
    w.add_crossing(hop, path_edge);
    fs::write(&w_path, serde_json::to_string(&w).unwrap()).unwrap();
    let out = run(&["verify-witness", "--instance", inst_s, "--witness", w_s]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("barrier-crossed"));

    let out = run(&[
        "route-witness",
        "--instance",
        inst_s,
        "--partition",
        "7,7,9;7,8,10;8,8,8",
    ]);
    assert_eq!(code(&out), 2);
    assert_eq!(
        code(&run(&[
            "gen-3p",
            "--m",
            "2",
            "--B",
            "10",
            "--A",
            "3,3,5,3,3,3"
        ])),
        2
    );
    assert_eq!(
        code(&run(&["gen-3p", "--m", "2", "--B", "10", "--A", "3,x"])),
        2
    );
}

#[test]
fn sweep_subcommand() {
    let out = run(&["sweep", "--n", "6", "--count", "50", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["graphs"], 50);
    assert_eq!(report["disagreements"], 0);
    assert_eq!(code(&run(&["sweep", "--n", "20"])), 2);
}
