//! Straight-line circle drawings as SVG 1.1.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::circular::{check_outer_fan_planar, classify_by_positions, CircularOrder, EdgeClass};
use crate::graph::Graph;

pub const CANVAS: f64 = 512.0;
const RADIUS: f64 = 200.0;
const VERTEX_RADIUS: f64 = 9.0;

/// Position of the `i`-th of `n` circle slots: slot 0 at 90 degrees, then
/// counterclockwise in equal steps. SVG's y axis points down.
pub fn slot_coordinates(i: usize, n: usize) -> (f64, f64) {
    let theta = PI / 2.0 + 2.0 * PI * i as f64 / n as f64;
    let c = CANVAS / 2.0;
    (c + RADIUS * theta.cos(), c - RADIUS * theta.sin())
}

/// Renders `g` with its vertices on a circle in the cyclic order `ord` and
/// edges as chords. The fan-planarity verdict is annotated in the title and
/// the edge that violates it (if any) is drawn in red.
pub fn render_svg(g: &Graph, ord: &CircularOrder) -> String {
    let n = g.n();
    let report = check_outer_fan_planar(g, ord);
    let pos = ord.positions();
    let coords: Vec<(f64, f64)> = (0..n).map(|v| slot_coordinates(pos[v], n)).collect();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(
        s,
        "<title>n={} m={} order=({}) outer-fan-planar={} crossings={}</title>",
        n,
        g.m(),
        ord,
        report.outer_fan_planar,
        report.crossing_count()
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<g id="edges" stroke-width="1.5">"#);
    for &(u, v) in g.edges() {
        let class = match classify_by_positions(&pos, n, (u, v)) {
            EdgeClass::Outer => "outer",
            EdgeClass::TwoHop => "two-hop",
            EdgeClass::Long => "long",
        };
        let colour = if report.first_violation == Some((u, v)) {
            "#d62728"
        } else {
            "#1f3b73"
        };
        let (x1, y1) = coords[u];
        let (x2, y2) = coords[v];
        let _ = writeln!(
            s,
            r#"<line class="{class}" data-edge="{u} {v}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{colour}"/>"#
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<g id="vertices" font-family="sans-serif" font-size="11" text-anchor="middle">"#
    );
    for (v, &(x, y)) in coords.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"<circle data-vertex="{v}" cx="{x:.3}" cy="{y:.3}" r="{VERTEX_RADIUS}" fill="#ffffff" stroke="#000000"/>"##
        );
        let _ = writeln!(s, r#"<text x="{x:.3}" y="{:.3}">{v}</text>"#, y + 4.0);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
