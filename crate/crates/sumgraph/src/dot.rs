//! Graphviz DOT export with a fixed 16-entry edge palette.
//!
//! Output is byte-deterministic: vertices ascend by label and edges follow
//! the canonical edge order. Each edge carries a `color` attribute selected
//! by its class index, cycling when a coloring has more than 16 classes.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::coloring::{verify_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, SumGraph};

/// Palette entries as `(name, hex)` in class-index order. Indices 0..10
/// follow the first-appearance order of the named colors in the worked
/// figures (blue, ivory, brown, orange, grey, purple, green, yellow, pink,
/// red, black), then mustard, cyan, maroon, olive, teal.
pub const PALETTE: [(&str, &str); 16] = [
    ("blue", "#2457d6"),
    ("ivory", "#e8e2c8"),
    ("brown", "#8a5a2b"),
    ("orange", "#f28c28"),
    ("grey", "#8c8c8c"),
    ("purple", "#7d3fbf"),
    ("green", "#2e8b57"),
    ("yellow", "#e0c020"),
    ("pink", "#e86ca4"),
    ("red", "#d03030"),
    ("black", "#1a1a1a"),
    ("mustard", "#c9a227"),
    ("cyan", "#29b3c4"),
    ("maroon", "#7d2a3c"),
    ("olive", "#6b8e23"),
    ("teal", "#1f7a70"),
];

/// Hex color for a class index, cycling past the palette length.
pub fn class_color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()].1
}

/// Palette name for a class index, cycling past the palette length.
pub fn class_color_name(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()].0
}

/// Renders `g` with `coloring` as an undirected DOT graph. The coloring
/// must verify (proper and complete) against `g`.
pub fn to_dot(g: &SumGraph, coloring: &EdgeColoring) -> Result<String> {
    let report = verify_coloring(g, coloring);
    if !report.ok() {
        let detail = report
            .violations
            .first()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "empty coloring for a nonempty edge set".to_string());
        return Err(Error::UnverifiedColoring(detail));
    }

    let mut class_of: BTreeMap<Edge, usize> = BTreeMap::new();
    for (idx, class) in coloring.classes().iter().enumerate() {
        for e in class {
            class_of.insert(*e, idx);
        }
    }

    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", g.family()).expect("write to string");
    out.push_str("    layout=circo;\n");
    out.push_str("    node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "    \"{v}\";").expect("write to string");
    }
    for e in g.edges() {
        let idx = class_of[&e];
        writeln!(
            out,
            "    \"{}\" -- \"{}\" [color=\"{}\"];",
            e.lo(),
            e.hi(),
            class_color(idx)
        )
        .expect("write to string");
    }
    out.push_str("}\n");
    Ok(out)
}
