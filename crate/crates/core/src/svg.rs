//! Minimal SVG 1.1 rendering of straight-line drawings.

use crate::geometry::Point;
use crate::graph::{Drawing, Graph};
use crate::Result;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    /// Output width in pixels; height follows the aspect ratio.
    pub width: f64,
    /// Vertex radius as a fraction of the larger drawing extent.
    pub vertex_radius: f64,
    /// Edge stroke width as a fraction of the larger drawing extent.
    pub stroke_width: f64,
    pub labels: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            width: 600.0,
            vertex_radius: 0.012,
            stroke_width: 0.004,
            labels: false,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders `g` as drawn by `d`. The y axis points up, as in the drawing
/// coordinates; the view box is fitted to the vertices with a 5% margin.
pub fn render_svg(g: &Graph, d: &Drawing, style: &SvgStyle) -> Result<String> {
    let pos: Vec<Point> = d.aligned(g)?.into_iter().map(|p| Point::new(p.x, -p.y)).collect();
    let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for p in &pos {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if pos.is_empty() {
        lo = Point::new(-0.5, -0.5);
        hi = Point::new(0.5, 0.5);
    }
    let mut extent = (hi.x - lo.x).max(hi.y - lo.y);
    if extent <= 0.0 {
        extent = 1.0;
    }
    let margin = 0.05 * extent;
    let (w, h) = ((hi.x - lo.x).max(0.0) + 2.0 * margin, (hi.y - lo.y).max(0.0) + 2.0 * margin);
    let (w, h) = (w.max(margin), h.max(margin));
    let height = style.width * h / w;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.2}" height="{:.2}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        style.width,
        height,
        lo.x - margin,
        lo.y - margin,
        w,
        h
    )
    .unwrap();
    writeln!(out, r#"<rect x="{:.6}" y="{:.6}" width="{:.6}" height="{:.6}" fill="white"/>"#, lo.x - margin, lo.y - margin, w, h).unwrap();
    writeln!(
        out,
        r##"<g stroke="#333333" stroke-width="{:.6}" stroke-linecap="round">"##,
        style.stroke_width * extent
    )
    .unwrap();
    for e in g.edges() {
        let (a, b) = (pos[e.u], pos[e.v]);
        writeln!(out, r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#, a.x, a.y, b.x, b.y).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    let r = style.vertex_radius * extent;
    writeln!(out, r##"<g fill="#1f77b4" stroke="none">"##).unwrap();
    for p in &pos {
        writeln!(out, r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}"/>"#, p.x, p.y, r).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if style.labels {
        writeln!(out, r##"<g font-family="sans-serif" font-size="{:.6}" fill="#000000">"##, 3.0 * r).unwrap();
        for (id, p) in g.vertex_ids().zip(&pos) {
            writeln!(out, r#"<text x="{:.6}" y="{:.6}">{}</text>"#, p.x + 1.2 * r, p.y - 1.2 * r, escape(id)).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
