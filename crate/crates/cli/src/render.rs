use std::fmt::Write;

use excessive_core::{Covering, SimpleGraph};

const PALETTE: [&str; 10] = [
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
    "cyan4",
    "gold3",
    "gray40",
];

/// Undirected DOT drawing; each edge is labelled with the (1-based) indices
/// of the matchings that contain it and drawn in one colour per matching.
pub fn to_dot(g: &SimpleGraph, cover: &Covering) -> String {
    let mut out = String::from("graph covering {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for &e in g.edges() {
        let owners: Vec<usize> = cover
            .iter()
            .enumerate()
            .filter(|(_, mm)| mm.contains(e))
            .map(|(i, _)| i)
            .collect();
        let label = owners
            .iter()
            .map(|i| format!("M{}", i + 1))
            .collect::<Vec<_>>()
            .join(",");
        let color = owners
            .iter()
            .map(|i| PALETTE[i % PALETTE.len()])
            .collect::<Vec<_>>()
            .join(":");
        writeln!(
            out,
            "  {} -- {} [label=\"{label}\", color=\"{color}\", penwidth=2];",
            e.u(),
            e.v()
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
