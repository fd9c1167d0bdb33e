//! Degree-2 vertices: the ratio point on `AB` when the segment reaches the
//! disk, otherwise the point of the circle maximizing the angle `A p* B`.

use super::{DisplacementResult, Method};
use crate::geometry::{
    canonical_two_point_frame, min_incident_angle, segment_disk_intersection, unsigned_angle,
    DiskSegmentIntersection, Point, COINCIDENCE_EPS,
};
use crate::{Error, Result};

/// A circle through `A = (0,-1)` and `B = (0,1)` touching the displacement
/// circle, expressed in the canonical frame of the pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentCircleSolution {
    /// Center `(x, 0)` of the circle through `A`, `B` and `p*`.
    pub o: Point,
    /// Signed radius from the tangency system; positive for external
    /// tangency `|O P| = r + r'`, negative when the circle encloses the disk.
    pub r_prime: f64,
    pub p_star_canonical: Point,
}

pub fn solve_degree2(p: Point, a: Point, b: Point, r: f64) -> DisplacementResult {
    let neighbors = [a, b];
    let Ok(inter) = segment_disk_intersection(a, b, p, r) else {
        return DisplacementResult::degenerate(p);
    };
    let (p_star, method) = match inter {
        DiskSegmentIntersection::Empty => match max_angle_point(p, a, b, r) {
            Ok((_, pt)) => (pt, Method::TangentCircle),
            Err(_) => return DisplacementResult::unchanged(p, &neighbors),
        },
        _ => {
            let q = ratio_point(p, a, b);
            if p.dist(q) <= r {
                (q, Method::RatioPoint)
            } else {
                let nearest = inter
                    .endpoints()
                    .into_iter()
                    .min_by(|u, v| u.dist(q).total_cmp(&v.dist(q)))
                    .expect("non-empty intersection has an endpoint");
                (nearest, Method::ClippedRatio)
            }
        }
    };
    match min_incident_angle(p_star, &neighbors) {
        Ok(min_angle) => DisplacementResult {
            p_star,
            min_angle,
            method,
            degenerate: false,
        },
        Err(_) => DisplacementResult::degenerate(p),
    }
}

/// Point `Q` on `AB` with `|AQ| / |BQ| = |AP| / |BP|`.
pub(crate) fn ratio_point(p: Point, a: Point, b: Point) -> Point {
    let ap = a.dist(p);
    let bp = b.dist(p);
    let t = ap / (ap + bp);
    a.lerp(b, t)
}

/// Point on the circle `|p p*| = r` maximizing the angle `A p* B`, assuming
/// the segment `AB` misses the disk.
pub fn max_angle_point(
    p: Point,
    a: Point,
    b: Point,
    r: f64,
) -> Result<(TangentCircleSolution, Point)> {
    let frame = canonical_two_point_frame(a, b)?;
    let pc = frame.apply(p);
    let rc = r * frame.scale;
    let ca = Point::new(0.0, -1.0);
    let cb = Point::new(0.0, 1.0);
    let mut best: Option<(TangentCircleSolution, f64)> = None;
    for sol in tangent_circles_canonical(pc, rc) {
        let angle = unsigned_angle(sol.p_star_canonical, ca, cb);
        if best.map_or(true, |(_, b)| angle > b + 1e-12) {
            best = Some((sol, angle));
        }
    }
    let (sol, _) = best.ok_or_else(|| {
        Error::Numeric(format!(
            "no admissible tangent circle for p={pc:?}, r={rc} in canonical frame"
        ))
    })?;
    Ok((sol, frame.apply_inverse(sol.p_star_canonical)))
}

/// Every tangency point from the quadratic system, in the original frame.
/// Both roots matter to the degree-3 solver: when the line `AB` crosses the
/// disk each side of it has its own locally optimal point.
pub fn tangent_points(p: Point, a: Point, b: Point, r: f64) -> Vec<Point> {
    let Ok(frame) = canonical_two_point_frame(a, b) else {
        return vec![];
    };
    tangent_circles_canonical(frame.apply(p), r * frame.scale)
        .into_iter()
        .map(|s| frame.apply_inverse(s.p_star_canonical))
        .collect()
}

/// Solves `(x - Px)^2 + Py^2 = (r + r')^2`, `x^2 + 1 = r'^2` for the centers
/// `O = (x, 0)` of circles through `(0, +-1)` tangent to the circle around `P`.
fn tangent_circles_canonical(pc: Point, r: f64) -> Vec<TangentCircleSolution> {
    let (px, py) = (pc.x, pc.y);
    let k = px * px + py * py - r * r - 1.0;
    let mut centers: Vec<(f64, f64)> = Vec::with_capacity(2);
    if px.abs() <= 1e-12 * pc.norm().max(1.0) {
        // P on the line AB: the linear relation between x and r' degenerates.
        let rp = (py * py - 1.0 - r * r) / (2.0 * r);
        if rp >= 1.0 {
            let x = (rp * rp - 1.0).sqrt();
            centers.push((x, rp));
            if x > 0.0 {
                centers.push((-x, rp));
            }
        }
    } else {
        // 2 Px x = K - 2 r r'  substituted into  x^2 + 1 = r'^2.
        let qa = 4.0 * (r * r - px * px);
        let qb = -4.0 * k * r;
        let qc = k * k + 4.0 * px * px;
        for rp in quadratic(qa, qb, qc) {
            let x = (k - 2.0 * r * rp) / (2.0 * px);
            centers.push((x, rp));
        }
    }
    centers
        .into_iter()
        .filter_map(|(x, rp)| {
            let (x, rp) = polish_tangency(px, py, r, x, rp);
            let o = Point::new(x, 0.0);
            let d = o.dist(pc);
            if !(d > COINCIDENCE_EPS) || !x.is_finite() || !rp.is_finite() {
                return None;
            }
            let dir = (o - pc) * (1.0 / d);
            let p_star = if rp >= 0.0 { pc + dir * r } else { pc - dir * r };
            Some(TangentCircleSolution {
                o,
                r_prime: rp,
                p_star_canonical: p_star,
            })
        })
        .collect()
}

/// Real roots of `a t^2 + b t + c`, tolerating a vanishing leading term and
/// clamping a rounding-negative discriminant to a double root.
fn quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return vec![];
    }
    if a.abs() <= 1e-14 * scale {
        return if b != 0.0 { vec![-c / b] } else { vec![] };
    }
    let disc = b * b - 4.0 * a * c;
    let disc = if disc < 0.0 {
        if disc < -1e-12 * (b * b).max((4.0 * a * c).abs()) {
            return vec![];
        }
        0.0
    } else {
        disc
    };
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![0.0];
    }
    vec![q / a, c / q]
}

/// Newton refinement of the tangency system; the raw elimination loses
/// accuracy when `P` is close to the line `AB`.
fn polish_tangency(px: f64, py: f64, r: f64, mut x: f64, mut rp: f64) -> (f64, f64) {
    let residual = |x: f64, rp: f64| {
        let f1 = (x - px).powi(2) + py * py - (r + rp).powi(2);
        let f2 = x * x + 1.0 - rp * rp;
        (f1, f2)
    };
    let (mut f1, mut f2) = residual(x, rp);
    for _ in 0..8 {
        let norm = f1.abs() + f2.abs();
        if norm == 0.0 {
            break;
        }
        let j11 = 2.0 * (x - px);
        let j12 = -2.0 * (r + rp);
        let j21 = 2.0 * x;
        let j22 = -2.0 * rp;
        let det = j11 * j22 - j12 * j21;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dx = (f1 * j22 - f2 * j12) / det;
        let drp = (j11 * f2 - j21 * f1) / det;
        let (nx, nrp) = (x - dx, rp - drp);
        let (g1, g2) = residual(nx, nrp);
        if !(g1.abs() + g2.abs() < norm) {
            break;
        }
        x = nx;
        rp = nrp;
        f1 = g1;
        f2 = g2;
    }
    (x, rp)
}
