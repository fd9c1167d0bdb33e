use super::Point;
use crate::{Error, Result};

/// Portion of a closed segment lying inside a closed disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DiskSegmentIntersection {
    Empty,
    Point(Point),
    Segment(Point, Point),
}

impl DiskSegmentIntersection {
    pub fn is_empty(&self) -> bool {
        matches!(self, DiskSegmentIntersection::Empty)
    }

    pub fn endpoints(&self) -> Vec<Point> {
        match *self {
            DiskSegmentIntersection::Empty => vec![],
            DiskSegmentIntersection::Point(p) => vec![p],
            DiskSegmentIntersection::Segment(p, q) => vec![p, q],
        }
    }
}

/// Tangency is decided with a tolerance relative to the radius.
const TANGENCY_REL_TOL: f64 = 1e-9;

/// Clips the closed segment `[a, b]` against the closed disk of radius `r`
/// around `center`. Segment endpoints are returned in `a -> b` order.
pub fn segment_disk_intersection(
    a: Point,
    b: Point,
    center: Point,
    r: f64,
) -> Result<DiskSegmentIntersection> {
    let d = b - a;
    let len = d.norm();
    if !(len > 0.0) {
        return Err(Error::Degenerate("segment endpoints coincide".into()));
    }
    let ac = a - center;
    // Parameter of the foot of the perpendicular from `center`, and its distance.
    let t_foot = -d.dot(ac) / (len * len);
    let h = d.cross(ac).abs() / len;
    let tol = TANGENCY_REL_TOL * r;
    if h > r + tol {
        return Ok(DiskSegmentIntersection::Empty);
    }
    if (h - r).abs() <= tol {
        if (0.0..=1.0).contains(&t_foot) {
            return Ok(DiskSegmentIntersection::Point(a.lerp(b, t_foot)));
        }
        return Ok(DiskSegmentIntersection::Empty);
    }
    let half = (r * r - h * h).max(0.0).sqrt() / len;
    let t0 = (t_foot - half).max(0.0);
    let t1 = (t_foot + half).min(1.0);
    if t0 > t1 {
        return Ok(DiskSegmentIntersection::Empty);
    }
    if t0 == t1 {
        return Ok(DiskSegmentIntersection::Point(a.lerp(b, t0)));
    }
    let p0 = if t0 == 0.0 { a } else { a.lerp(b, t0) };
    let p1 = if t1 == 1.0 { b } else { a.lerp(b, t1) };
    Ok(DiskSegmentIntersection::Segment(p0, p1))
}
