//! Renders the weighted dual graph in DOT format.
//!
//! Styling carries the real structure: components of the real boundary are
//! bold, other boundary components solid, conjugate components dashed, and
//! everything outside the boundary dotted. Edges at non-real points are
//! dashed; multiplicities above one become edge labels.

use std::fmt::Write;

use crate::pair::{PointReality, Reality, RealSNCPair};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(pair: &RealSNCPair) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(&pair.name));
    for c in pair.component_ids() {
        let comp = pair.component(c);
        let style = if matches!(comp.reality, Reality::ConjugateOf(_)) {
            "dashed"
        } else if comp.in_boundary {
            "solid,bold"
        } else {
            "dotted"
        };
        let _ = writeln!(
            out,
            "  n{} [label={}, style=\"{}\"];",
            c,
            quote(&format!(
                "{} ({:+})",
                comp.name, comp.self_intersection
            )),
            style
        );
    }
    for edge in pair.edges() {
        let mut attrs = Vec::new();
        if matches!(edge.point, PointReality::ConjugateOf(_)) {
            attrs.push("style=dashed".to_string());
        }
        if edge.multiplicity > 1 {
            attrs.push(format!("label=\"{}\"", edge.multiplicity));
        }
        let attrs = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        let _ = writeln!(out, "  n{} -- n{}{};", edge.ends.0, edge.ends.1, attrs);
    }
    out.push_str("}\n");
    out
}
