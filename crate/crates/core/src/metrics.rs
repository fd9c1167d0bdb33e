//! Drawing quality measures: angular resolution, edge-length error, crossings.

use crate::geometry::{min_incident_angle, Point};
use crate::graph::{Drawing, Graph};
use crate::Result;
use indexmap::IndexMap;
use serde::Serialize;
use std::f64::consts::TAU;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metrics {
    /// Smallest angle between edges sharing a vertex, radians.
    pub angular_resolution: f64,
    /// Root mean square of `(|uv| - l) / l` over all edges.
    pub edge_length_rmse: f64,
    /// Intersecting pairs of edges without a shared endpoint.
    pub crossings: usize,
    /// Crossings that are not proper: touching or collinear overlap.
    pub degenerate_crossings: usize,
    /// Set when an edge has coincident endpoints.
    pub degenerate: bool,
    /// Per-vertex smallest incident angle, `2*pi` for vertices of degree < 2.
    pub per_vertex_min_angle: IndexMap<String, f64>,
}

/// How two closed segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentContact {
    Disjoint,
    /// Interiors cross at a single point.
    Proper,
    /// Touching at an endpoint or overlapping collinearly.
    Degenerate,
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point, b: Point, q: Point) -> bool {
    q.x >= a.x.min(b.x) && q.x <= a.x.max(b.x) && q.y >= a.y.min(b.y) && q.y <= a.y.max(b.y)
}

pub fn segment_contact(p1: Point, p2: Point, q1: Point, q2: Point) -> SegmentContact {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        return SegmentContact::Proper;
    }
    let touches = (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2));
    if touches {
        SegmentContact::Degenerate
    } else {
        SegmentContact::Disjoint
    }
}

/// Counts (all, degenerate) crossings between edges with no shared endpoint.
pub fn count_crossings(g: &Graph, pos: &[Point]) -> (usize, usize) {
    let edges = g.edges();
    let (mut all, mut degenerate) = (0, 0);
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v {
                continue;
            }
            match segment_contact(pos[e.u], pos[e.v], pos[f.u], pos[f.v]) {
                SegmentContact::Disjoint => {}
                SegmentContact::Proper => all += 1,
                SegmentContact::Degenerate => {
                    all += 1;
                    degenerate += 1;
                }
            }
        }
    }
    (all, degenerate)
}

/// Smallest incident angle at each vertex, with a flag for coincident
/// adjacent vertices (reported as angle 0).
pub fn vertex_min_angles(g: &Graph, pos: &[Point]) -> (Vec<f64>, bool) {
    let mut degenerate = false;
    let mut out = Vec::with_capacity(pos.len());
    let mut nbrs = Vec::new();
    for (v, &p) in pos.iter().enumerate() {
        nbrs.clear();
        nbrs.extend(g.neighbors(v).iter().map(|&u| pos[u]));
        let a = match nbrs.len() {
            0 => TAU,
            _ => min_incident_angle(p, &nbrs).unwrap_or_else(|_| {
                degenerate = true;
                0.0
            }),
        };
        out.push(a);
    }
    (out, degenerate)
}

/// Relative RMS edge-length error; edges without a desired length use
/// `default_length`.
pub fn edge_length_rmse(g: &Graph, pos: &[Point], default_length: f64) -> f64 {
    if g.edge_count() == 0 {
        return 0.0;
    }
    let sum: f64 = g
        .edges()
        .iter()
        .map(|e| {
            let l = e.length.unwrap_or(default_length);
            let rel = (pos[e.u].dist(pos[e.v]) - l) / l;
            rel * rel
        })
        .sum();
    (sum / g.edge_count() as f64).sqrt()
}

/// Metrics with unit default edge length.
pub fn compute_metrics(g: &Graph, d: &Drawing) -> Result<Metrics> {
    compute_metrics_with_default(g, d, 1.0)
}

pub fn compute_metrics_with_default(g: &Graph, d: &Drawing, default_length: f64) -> Result<Metrics> {
    let pos = d.aligned(g)?;
    let (angles, degenerate) = vertex_min_angles(g, &pos);
    let (crossings, degenerate_crossings) = count_crossings(g, &pos);
    Ok(Metrics {
        angular_resolution: angles.iter().copied().fold(TAU, f64::min),
        edge_length_rmse: edge_length_rmse(g, &pos, default_length),
        crossings,
        degenerate_crossings,
        degenerate,
        per_vertex_min_angle: g.vertex_ids().map(str::to_string).zip(angles).collect(),
    })
}
