//! SVG 1.1 diagrams of labeled polygons.
//!
//! Vertices sit clockwise on a circle starting at 12 o'clock, midpoints at
//! the geometric edge midpoints and the center node at the origin. Every line
//! is drawn as one segment from its first to its last node.

use std::fmt::Write as _;

use crate::error::Result;
use crate::polygon::{self, Labeling, NodeId};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderConfig {
    pub radius: f64,
    pub node_radius: f64,
    pub font_size: f64,
    pub margin: f64,
    pub stroke_width: f64,
}

pub const DEFAULT_CONFIG: RenderConfig = RenderConfig {
    radius: 200.0,
    node_radius: 18.0,
    font_size: 16.0,
    margin: 30.0,
    stroke_width: 2.0,
};

/// Fixed two-decimal formatting; never prints `-0.00`.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// Drawing position of a node.
pub fn position(node: NodeId, n: usize, radius: f64) -> (f64, f64) {
    let vertex = |i: usize| {
        let angle =
            -std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * (i - 1) as f64 / n as f64;
        (radius * angle.cos(), radius * angle.sin())
    };
    match node {
        NodeId::Center => (0.0, 0.0),
        NodeId::Vertex(i) => vertex(i),
        NodeId::Midpoint(i) => {
            let (a, b) = (vertex(i), vertex(polygon::wrap(i as i64 + 1, n)));
            ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
        }
    }
}

pub fn render_svg(labeling: &Labeling) -> Result<String> {
    render_svg_with(labeling, &DEFAULT_CONFIG)
}

pub fn render_svg_with(labeling: &Labeling, cfg: &RenderConfig) -> Result<String> {
    labeling.require_complete()?;
    let n = labeling.n();
    let half = cfg.radius + cfg.node_radius + cfg.margin;
    let side = 2.0 * half;
    let pos = |node| position(node, n, cfg.radius);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="{o} {o} {w} {w}">"#,
        w = num(side),
        o = num(-half),
    );
    let _ = writeln!(
        svg,
        r#"  <g fill="none" stroke="black" stroke-width="{}">"#,
        num(cfg.stroke_width)
    );
    for line in polygon::lines(n)? {
        let (a, b) = (pos(line.nodes[0]), pos(line.nodes[2]));
        let _ = writeln!(
            svg,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1)
        );
    }
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(
        svg,
        r#"  <g font-family="sans-serif" font-size="{}" text-anchor="middle" dominant-baseline="central">"#,
        num(cfg.font_size)
    );
    for node in NodeId::all(n) {
        let (x, y) = pos(node);
        let value = labeling.get(node).expect("checked complete");
        let _ = writeln!(
            svg,
            r#"    <circle cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black" stroke-width="{s}"/>"#,
            x = num(x),
            y = num(y),
            r = num(cfg.node_radius),
            s = num(cfg.stroke_width),
        );
        let _ = writeln!(
            svg,
            r#"    <text x="{}" y="{}">{value}</text>"#,
            num(x),
            num(y)
        );
    }
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
