//! Max-min-angle (MMA) displacement of a single vertex.
//!
//! Given a vertex at `p`, its neighbors `A_1..A_k` and a radius `r`, find
//! `p*` with `|p p*| <= r` maximizing the smallest angle between incident
//! edges. Degrees up to three are solved exactly; higher degrees use a grid.

mod degree2;
mod degree3;
mod equal_pair;
mod fermat;
mod grid;

pub use degree2::{max_angle_point, solve_degree2, tangent_points, TangentCircleSolution};
pub use degree3::solve_degree3;
pub use equal_pair::{solve_equal_pair, EqualPairReduction, FactorCase};
pub use fermat::{fermat_point, FermatCase};
pub use grid::{grid_points, solve_grid};

use crate::geometry::{min_incident_angle, Point, COINCIDENCE_EPS};
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::TAU;

/// Candidates farther than `r` by more than this are infeasible.
pub const FEASIBILITY_TOL: f64 = 1e-9;
/// Angles closer than this are considered tied among exact candidates.
pub const ANGLE_TIE_TOL: f64 = 1e-12;

/// One MMA instance.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementQuery {
    pub p: Point,
    pub neighbors: Vec<Point>,
    pub r: f64,
}

impl DisplacementQuery {
    pub fn new(p: Point, neighbors: Vec<Point>, r: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidConfig(format!("radius must be positive, got {r}")));
        }
        if !p.is_finite() || neighbors.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidConfig("non-finite coordinate".into()));
        }
        Ok(Self { p, neighbors, r })
    }
}

/// Which branch produced the displaced position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Unchanged,
    RatioPoint,
    ClippedRatio,
    TangentCircle,
    Fermat,
    PairwiseMaxAngle,
    EqualPairQuartic,
    Grid,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Unchanged => "unchanged",
            Method::RatioPoint => "ratio_point",
            Method::ClippedRatio => "clipped_ratio",
            Method::TangentCircle => "tangent_circle",
            Method::Fermat => "fermat",
            Method::PairwiseMaxAngle => "pairwise_max_angle",
            Method::EqualPairQuartic => "equal_pair_quartic",
            Method::Grid => "grid",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DisplacementResult {
    pub p_star: Point,
    /// Smallest incident angle at `p_star`, radians.
    pub min_angle: f64,
    pub method: Method,
    /// Set when no candidate had a well-defined incident angle.
    pub degenerate: bool,
}

impl DisplacementResult {
    /// `p` kept in place with its own incident angle (or flagged when undefined).
    pub fn unchanged(p: Point, neighbors: &[Point]) -> Self {
        if neighbors.is_empty() {
            return Self {
                p_star: p,
                min_angle: TAU,
                method: Method::Unchanged,
                degenerate: false,
            };
        }
        match min_incident_angle(p, neighbors) {
            Ok(a) => Self {
                p_star: p,
                min_angle: a,
                method: Method::Unchanged,
                degenerate: false,
            },
            Err(_) => Self::degenerate(p),
        }
    }

    pub fn degenerate(p: Point) -> Self {
        Self {
            p_star: p,
            min_angle: 0.0,
            method: Method::Unchanged,
            degenerate: true,
        }
    }
}

/// Grid step for the high-degree fallback, as a fraction of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridParams {
    pub delta_ratio: f64,
}

impl GridParams {
    pub fn new(delta_ratio: f64) -> Result<Self> {
        if !(delta_ratio > 0.0 && delta_ratio <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "grid delta ratio must lie in (0, 1], got {delta_ratio}"
            )));
        }
        Ok(Self { delta_ratio })
    }
}

impl Default for GridParams {
    fn default() -> Self {
        Self {
            delta_ratio: 1.0 / 3.0,
        }
    }
}

/// Solves one MMA instance, dispatching on the number of distinct neighbors.
pub fn solve(q: &DisplacementQuery, grid: GridParams) -> DisplacementResult {
    let neighbors = dedup_neighbors(&q.neighbors);
    match neighbors.len() {
        0 | 1 => DisplacementResult::unchanged(q.p, &neighbors),
        2 => solve_degree2(q.p, neighbors[0], neighbors[1], q.r),
        3 => solve_degree3(q.p, neighbors[0], neighbors[1], neighbors[2], q.r),
        _ => solve_grid(q.p, &neighbors, q.r, grid),
    }
}

/// Merges neighbor positions that coincide within [`COINCIDENCE_EPS`],
/// keeping first occurrences in order.
pub fn dedup_neighbors(neighbors: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(neighbors.len());
    for &a in neighbors {
        if !out.iter().any(|b| b.dist(a) <= COINCIDENCE_EPS) {
            out.push(a);
        }
    }
    out
}

/// Scores candidates by their smallest incident angle and keeps the best one.
///
/// Ties within `tie_tol` prefer the candidate closer to `p`, then the
/// lexicographically smaller point; candidates that coincide within the
/// tolerance keep the earlier one. Candidates beyond `r + FEASIBILITY_TOL`
/// are dropped; those just outside `r` are pulled back onto the circle.
pub(crate) fn select_best<I>(
    p: Point,
    neighbors: &[Point],
    r: f64,
    tie_tol: f64,
    candidates: I,
) -> Option<DisplacementResult>
where
    I: IntoIterator<Item = (Point, Method)>,
{
    let mut best: Option<(DisplacementResult, f64)> = None;
    for (mut pt, method) in candidates {
        if !pt.is_finite() {
            continue;
        }
        let mut dist = pt.dist(p);
        if dist > r + FEASIBILITY_TOL {
            continue;
        }
        if dist > r {
            pt = p + (pt - p) * (r / dist);
            dist = pt.dist(p);
        }
        let Ok(angle) = min_incident_angle(pt, neighbors) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some((b, bdist)) => {
                if angle > b.min_angle + tie_tol {
                    true
                } else if angle < b.min_angle - tie_tol {
                    false
                } else {
                    let dist_tol = tie_tol * bdist.max(1.0);
                    if dist < *bdist - dist_tol {
                        true
                    } else if dist > *bdist + dist_tol || pt.dist(b.p_star) <= dist_tol {
                        false
                    } else {
                        pt.lex_cmp(&b.p_star).is_lt()
                    }
                }
            }
        };
        if better {
            best = Some((
                DisplacementResult {
                    p_star: pt,
                    min_angle: angle,
                    method,
                    degenerate: false,
                },
                dist,
            ));
        }
    }
    best.map(|(res, _)| res)
}
