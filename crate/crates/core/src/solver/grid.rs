use super::{select_best, DisplacementResult, GridParams, Method};
use crate::geometry::Point;

/// Relative slack on `r^2` so that grid points exactly on the circle count.
const GRID_BOUNDARY_SLACK: f64 = 1e-12;

/// Grid points `p + (i*delta, j*delta)` inside the closed disk, `delta = ratio * r`.
pub fn grid_points(p: Point, r: f64, grid: GridParams) -> Vec<Point> {
    let delta = grid.delta_ratio * r;
    let n = (r / delta).ceil() as i64;
    let limit = r * r * (1.0 + GRID_BOUNDARY_SLACK);
    let mut out = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            if ((i * i + j * j) as f64) * delta * delta <= limit {
                out.push(Point::new(p.x + i as f64 * delta, p.y + j as f64 * delta));
            }
        }
    }
    out
}

/// Exhaustive search over [`grid_points`]; ties go to the point nearest `p`,
/// then to the lexicographically smallest.
pub fn solve_grid(p: Point, neighbors: &[Point], r: f64, grid: GridParams) -> DisplacementResult {
    let candidates = grid_points(p, r, grid).into_iter().map(|q| (q, Method::Grid));
    select_best(p, neighbors, f64::INFINITY, 0.0, candidates)
        .unwrap_or_else(|| DisplacementResult::degenerate(p))
}
