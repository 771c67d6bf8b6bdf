//! SVG rendering of an edge-colored graph on a circular layout.
//!
//! Pure string generation so the output can be unit-tested off the browser.

use std::collections::BTreeMap;
use std::fmt::Write;

use sumgraph::dot::{class_color, class_color_name};
use sumgraph::{Edge, EdgeColoring, SumGraph};

const NODE_RADIUS: f64 = 14.0;
const MARGIN: f64 = 26.0;

fn positions(g: &SumGraph, size: f64) -> BTreeMap<i64, (f64, f64)> {
    let n = g.vertex_count() as f64;
    let center = size / 2.0;
    let radius = center - MARGIN;
    g.vertices()
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let angle = std::f64::consts::TAU * (idx as f64) / n - std::f64::consts::FRAC_PI_2;
            (v, (center + radius * angle.cos(), center + radius * angle.sin()))
        })
        .collect()
}

/// Renders the graph as a square SVG of the given pixel size. Every edge is
/// stroked with its class color; uncolored edges (only possible with an
/// incomplete coloring) fall back to a dashed light stroke.
pub fn render_svg(g: &SumGraph, coloring: &EdgeColoring, size: f64) -> String {
    let pos = positions(g, size);
    let mut class_of: BTreeMap<Edge, usize> = BTreeMap::new();
    for (idx, class) in coloring.classes().iter().enumerate() {
        for e in class {
            class_of.insert(*e, idx);
        }
    }

    let mut svg = String::new();
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size:.0} {size:.0}\" \
         width=\"{size:.0}\" height=\"{size:.0}\">"
    )
    .expect("write to string");
    svg.push('\n');

    for e in g.edges() {
        let (x1, y1) = pos[&e.lo()];
        let (x2, y2) = pos[&e.hi()];
        match class_of.get(&e) {
            Some(&idx) => {
                write!(
                    svg,
                    "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" \
                     stroke=\"{}\" stroke-width=\"2.5\"><title>{} in class {} ({})</title></line>",
                    class_color(idx),
                    e,
                    idx,
                    class_color_name(idx)
                )
                .expect("write to string");
            }
            None => {
                write!(
                    svg,
                    "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" \
                     stroke=\"#cccccc\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>",
                )
                .expect("write to string");
            }
        }
        svg.push('\n');
    }

    for (&v, &(x, y)) in &pos {
        write!(
            svg,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{NODE_RADIUS}\" fill=\"#ffffff\" \
             stroke=\"#444444\" stroke-width=\"1.5\"/>\n\
             <text x=\"{x:.1}\" y=\"{y:.1}\" text-anchor=\"middle\" dominant-baseline=\"central\" \
             font-family=\"monospace\" font-size=\"12\">{v}</text>"
        )
        .expect("write to string");
        svg.push('\n');
    }

    svg.push_str("</svg>\n");
    svg
}
