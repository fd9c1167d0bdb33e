//! Spring embedder with the MMA displacement as an additional angle force.
//!
//! Each step reads the current drawing only and moves every vertex by
//! `spring_weight * S(v) + angle_weight * (p* - p)`, where `S(v)` is the
//! spring force averaged over the neighbors of `v` and capped at `2 r_t`, and
//! `p*` solves the MMA problem at `v` with radius `r_t = r_0 * decay^t`.
//! The spring part also includes an inverse-square repulsion between
//! non-adjacent vertices, as in Eades' model; without it nothing keeps
//! non-adjacent vertices apart and cycles fold onto themselves.

use crate::geometry::Point;
use crate::graph::{Drawing, Graph};
use crate::metrics::{edge_length_rmse, vertex_min_angles};
use crate::solver::{solve, DisplacementQuery, GridParams};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::TAU;
use std::str::FromStr;

/// Spring displacement is capped at this multiple of the current radius.
pub const SPRING_CAP: f64 = 2.0;
/// Early stop once the largest move stays below this fraction of the
/// default edge length for [`CALM_ITERATIONS`] consecutive steps.
pub const CALM_TOL: f64 = 1e-4;
pub const CALM_ITERATIONS: usize = 10;
/// Distance floor for coincident spring endpoints, relative to the edge length.
pub const SPRING_FLOOR: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpringModel {
    /// `f(t) = t - 1`
    Linear,
    /// `f(t) = ln t`
    Logarithmic,
}

impl SpringModel {
    pub fn eval(self, t: f64) -> f64 {
        match self {
            SpringModel::Linear => t - 1.0,
            SpringModel::Logarithmic => t.ln(),
        }
    }
}

impl FromStr for SpringModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(SpringModel::Linear),
            "logarithmic" | "log" => Ok(SpringModel::Logarithmic),
            _ => Err(Error::InvalidConfig(format!("unknown spring model {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LayoutConfig {
    pub iterations: usize,
    pub seed: u64,
    /// Angle-force radius at iteration 0.
    pub angle_radius_start: f64,
    pub angle_radius_decay: f64,
    pub angle_weight: f64,
    pub spring_weight: f64,
    pub default_edge_length: f64,
    pub spring_model: SpringModel,
    /// Strength of the inverse-square repulsion between non-adjacent vertices.
    pub repulsion_weight: f64,
    /// Intermediate vertices inserted on every edge before layout.
    pub subdivide_edges: usize,
    pub grid: GridParams,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        Self {
            iterations: 2000,
            seed: 0,
            angle_radius_start: 0.25,
            angle_radius_decay: 0.995,
            angle_weight: 1.0,
            spring_weight: 0.9,
            default_edge_length: 1.0,
            spring_model: SpringModel::Logarithmic,
            repulsion_weight: 1.0,
            subdivide_edges: 0,
            grid: GridParams::default(),
        }
    }
}

impl LayoutConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.iterations == 0 {
            return bad("iterations must be at least 1".into());
        }
        if !(self.angle_radius_start > 0.0 && self.angle_radius_start.is_finite()) {
            return bad(format!("angle radius must be positive, got {}", self.angle_radius_start));
        }
        if !(self.angle_radius_decay > 0.0 && self.angle_radius_decay <= 1.0) {
            return bad(format!("radius decay must lie in (0, 1], got {}", self.angle_radius_decay));
        }
        for (name, w) in [
            ("angle", self.angle_weight),
            ("spring", self.spring_weight),
            ("repulsion", self.repulsion_weight),
        ] {
            if !(w >= 0.0 && w.is_finite()) {
                return bad(format!("{name} weight must be non-negative, got {w}"));
            }
        }
        if self.angle_weight == 0.0 && self.spring_weight == 0.0 {
            return bad("angle and spring weights are both zero".into());
        }
        if !(self.default_edge_length > 0.0 && self.default_edge_length.is_finite()) {
            return bad(format!("edge length must be positive, got {}", self.default_edge_length));
        }
        GridParams::new(self.grid.delta_ratio)?;
        Ok(())
    }

    /// Angle-force radius at iteration `t`.
    pub fn radius_at(&self, t: usize) -> f64 {
        self.angle_radius_start * self.angle_radius_decay.powi(t as i32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceEntry {
    pub iteration: usize,
    pub radius: f64,
    pub max_displacement: f64,
    /// Measured on the drawing after this step.
    pub angular_resolution: f64,
    pub edge_length_rmse: f64,
}

#[derive(Clone, Debug)]
pub struct LayoutResult {
    /// The laid-out graph, including subdivision vertices.
    pub graph: Graph,
    pub drawing: Drawing,
    pub trace: Vec<TraceEntry>,
    pub converged: bool,
}

/// Uniform random positions in a square of side `sqrt(|V|) * edge_length`
/// centred at the origin. Points closer than `1e-9 * edge_length` to an
/// earlier one are redrawn.
pub fn initial_placement(g: &Graph, seed: u64, edge_length: f64) -> Drawing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = 0.5 * (g.vertex_count() as f64).sqrt() * edge_length;
    let mut pts: Vec<Point> = Vec::with_capacity(g.vertex_count());
    for _ in 0..g.vertex_count() {
        let p = loop {
            let p = Point::new(rng.gen_range(-half..=half), rng.gen_range(-half..=half));
            if pts.iter().all(|q| q.dist(p) > 1e-9 * edge_length) {
                break p;
            }
        };
        pts.push(p);
    }
    Drawing::from_points(g, &pts)
}

/// Replaces every edge by a path of `s + 1` edges, each with desired length
/// `l / (s + 1)`. Original vertices keep their indices.
pub fn subdivide(g: &Graph, s: usize, default_length: f64) -> Graph {
    let mut out = Graph::new();
    for id in g.vertex_ids() {
        out.add_vertex(id);
    }
    for e in g.edges() {
        let (u, v) = (g.vertex_id(e.u), g.vertex_id(e.v));
        if s == 0 {
            out.add_edge(u, v, e.length).expect("edge copied from a valid graph");
            continue;
        }
        let piece = e.length.unwrap_or(default_length) / (s + 1) as f64;
        let mut prev = u.to_string();
        for k in 1..=s {
            let mut id = format!("{u}~{v}~{k}");
            while out.index_of(&id).is_some() || g.index_of(&id).is_some() {
                id.push('\'');
            }
            out.add_vertex(&id);
            out.add_edge(&prev, &id, Some(piece)).expect("fresh subdivision vertex");
            prev = id;
        }
        out.add_edge(&prev, v, Some(piece)).expect("fresh subdivision vertex");
    }
    out
}

fn coincident_direction(seed: u64, iteration: usize, a: usize, b: usize) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((a as u64) << 32) ^ b as u64);
    rng.set_word_pos(iteration as u128 * 4);
    let t = rng.gen_range(0.0..TAU);
    Point::new(t.cos(), t.sin())
}

/// Sum over neighbors `u` of `f(|uv| / l_uv) * unit(u - v)`.
pub fn spring_force(g: &Graph, pos: &[Point], v: usize, cfg: &LayoutConfig, iteration: usize) -> Point {
    let mut force = Point::ORIGIN;
    for &u in g.neighbors(v) {
        let l = g.edge_length(u, v).unwrap_or(cfg.default_edge_length);
        let d = pos[u] - pos[v];
        let dist = d.norm();
        let floor = SPRING_FLOOR * l;
        let (dir, dist) = if dist < floor {
            let dir = coincident_direction(cfg.seed, iteration, u.min(v), u.max(v));
            (if v < u { dir } else { -dir }, floor)
        } else {
            (d * (1.0 / dist), dist)
        };
        force += dir * cfg.spring_model.eval(dist / l);
    }
    force
}

/// Sum over non-adjacent `u` of `(l / |uv|)^2 * unit(v - u)`, with `l` the
/// default edge length and `|uv|` floored as in [`spring_force`].
pub fn repulsion_force(g: &Graph, pos: &[Point], v: usize, cfg: &LayoutConfig, iteration: usize) -> Point {
    let l = cfg.default_edge_length;
    let floor = SPRING_FLOOR * l;
    let mut force = Point::ORIGIN;
    for u in 0..pos.len() {
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let d = pos[v] - pos[u];
        let dist = d.norm();
        let (dir, dist) = if dist < floor {
            let dir = coincident_direction(cfg.seed, iteration, u.min(v), u.max(v));
            (if v < u { -dir } else { dir }, floor)
        } else {
            (d * (1.0 / dist), dist)
        };
        force += dir * (l * l / (dist * dist));
    }
    force
}

/// `p* - p` for the MMA problem at `v` with radius `r`; zero when degenerate.
pub fn angle_force(g: &Graph, pos: &[Point], v: usize, r: f64, grid: GridParams) -> Point {
    let nbrs: Vec<Point> = g.neighbors(v).iter().map(|&u| pos[u]).collect();
    match DisplacementQuery::new(pos[v], nbrs, r) {
        Ok(q) => {
            let res = solve(&q, grid);
            if res.degenerate {
                Point::ORIGIN
            } else {
                res.p_star - pos[v]
            }
        }
        Err(_) => Point::ORIGIN,
    }
}

/// One simultaneous update on raw positions; also returns the largest move.
pub fn step_positions(g: &Graph, pos: &[Point], cfg: &LayoutConfig, iteration: usize) -> (Vec<Point>, f64) {
    let r = cfg.radius_at(iteration);
    let mut max_move = 0.0f64;
    let next = (0..pos.len())
        .map(|v| {
            let deg = g.degree(v);
            if deg == 0 {
                return pos[v];
            }
            let mut disp = Point::ORIGIN;
            if cfg.spring_weight > 0.0 {
                let mut f = spring_force(g, pos, v, cfg, iteration);
                if cfg.repulsion_weight > 0.0 {
                    f += repulsion_force(g, pos, v, cfg, iteration) * cfg.repulsion_weight;
                }
                let mut s = f * (cfg.spring_weight / deg as f64);
                let cap = SPRING_CAP * r;
                let n = s.norm();
                if n > cap {
                    s = s * (cap / n);
                }
                disp += s;
            }
            if cfg.angle_weight > 0.0 {
                disp += angle_force(g, pos, v, r, cfg.grid) * cfg.angle_weight;
            }
            max_move = max_move.max(disp.norm());
            pos[v] + disp
        })
        .collect();
    (next, max_move)
}

pub fn step(g: &Graph, d: &Drawing, cfg: &LayoutConfig, iteration: usize) -> Result<Drawing> {
    let pos = d.aligned(g)?;
    let (next, _) = step_positions(g, &pos, cfg, iteration);
    Ok(Drawing::from_points(g, &next))
}

/// Subdivides (if configured), places vertices at random and iterates until
/// the iteration budget is spent or the drawing stops moving.
pub fn layout(g: &Graph, cfg: &LayoutConfig) -> Result<LayoutResult> {
    cfg.validate()?;
    let graph = subdivide(g, cfg.subdivide_edges, cfg.default_edge_length);
    let mut pos = initial_placement(&graph, cfg.seed, cfg.default_edge_length).aligned(&graph)?;
    let mut trace = Vec::new();
    let mut calm = 0;
    let mut converged = false;
    for t in 0..cfg.iterations {
        let (next, max_move) = step_positions(&graph, &pos, cfg, t);
        if next.iter().any(|p| !p.is_finite()) {
            return Err(Error::Numeric(format!("non-finite position at iteration {t}")));
        }
        pos = next;
        let (angles, _) = vertex_min_angles(&graph, &pos);
        trace.push(TraceEntry {
            iteration: t,
            radius: cfg.radius_at(t),
            max_displacement: max_move,
            angular_resolution: angles.into_iter().fold(TAU, f64::min),
            edge_length_rmse: edge_length_rmse(&graph, &pos, cfg.default_edge_length),
        });
        calm = if max_move < CALM_TOL * cfg.default_edge_length { calm + 1 } else { 0 };
        if calm >= CALM_ITERATIONS {
            converged = true;
            break;
        }
    }
    let drawing = Drawing::from_points(&graph, &pos);
    Ok(LayoutResult {
        graph,
        drawing,
        trace,
        converged,
    })
}
