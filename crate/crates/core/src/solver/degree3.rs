use super::degree2::{solve_degree2, tangent_points};
use super::equal_pair::solve_equal_pair;
use super::fermat::fermat_point;
use super::{select_best, DisplacementResult, Method, ANGLE_TIE_TOL};
use crate::geometry::{segment_disk_intersection, Point};

/// Degree-3 vertices.
///
/// The optimum is either the Fermat point (all three angles equal), a point
/// maximizing a single pair angle, or a boundary point where the two smallest
/// angles are equal. Every candidate from every branch is scored by its
/// smallest incident angle and the best one wins.
pub fn solve_degree3(p: Point, a: Point, b: Point, c: Point, r: f64) -> DisplacementResult {
    let neighbors = [a, b, c];
    let mut candidates: Vec<(Point, Method)> = Vec::with_capacity(24);

    if let Ok((f, _)) = fermat_point(a, b, c) {
        if p.dist(f) <= r {
            candidates.push((f, Method::Fermat));
        }
    }

    for (u, apex, w) in [(b, a, c), (a, b, c), (a, c, b)] {
        candidates.extend(
            solve_equal_pair(p, u, apex, w, r)
                .into_iter()
                .map(|q| (q, Method::EqualPairQuartic)),
        );
    }

    for (u, v) in [(a, b), (a, c), (b, c)] {
        let pair = solve_degree2(p, u, v, r);
        if !pair.degenerate {
            candidates.push((pair.p_star, Method::PairwiseMaxAngle));
        }
        let misses = segment_disk_intersection(u, v, p, r).map_or(false, |i| i.is_empty());
        if misses {
            candidates.extend(
                tangent_points(p, u, v, r)
                    .into_iter()
                    .map(|q| (q, Method::PairwiseMaxAngle)),
            );
        }
    }

    candidates.push((p, Method::Unchanged));

    select_best(p, &neighbors, r, ANGLE_TIE_TOL, candidates)
        .unwrap_or_else(|| DisplacementResult::degenerate(p))
}
