//! Graphviz DOT export with per-color styling.
//!
//! Colors cycle through a fixed 12-entry qualitative palette keyed by the
//! dense color index; the external color value is always printed as the
//! edge label so palette collisions stay readable. An optional highlight
//! path is drawn with doubled pen width.

use crate::graph::EdgeColoredGraph;
use crate::rainbow::{check_rainbow_path, RainbowViolation};

/// Qualitative 12-color palette (ColorBrewer "Paired").
pub const PALETTE: [&str; 12] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
];

/// Renders `g` as an undirected DOT graph. If `highlight` is given it
/// must be a valid rainbow path in `g`; its edges are drawn at double
/// pen width.
pub fn export_dot(
    g: &EdgeColoredGraph,
    highlight: Option<&[usize]>,
) -> Result<String, RainbowViolation> {
    let mut highlighted = std::collections::HashSet::new();
    if let Some(seq) = highlight {
        check_rainbow_path(g, seq)?;
        for w in seq.windows(2) {
            highlighted.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    let mut out = String::from("graph rainbow {\n  node [shape=circle];\n");
    for v in 0..g.num_vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        let width = if highlighted.contains(&(e.u, e.v)) { 2 } else { 1 };
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\", color=\"{}\", penwidth={}];\n",
            e.u,
            e.v,
            e.color_value,
            PALETTE[e.color % PALETTE.len()],
            width
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
