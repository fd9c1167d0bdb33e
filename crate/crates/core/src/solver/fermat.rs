use crate::geometry::{unsigned_angle, Point};
use crate::{Error, Result};
use std::f64::consts::PI;

const CASE_SPLIT_ANGLE: f64 = 2.0 * PI / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FermatCase {
    /// All triangle angles below 120 degrees; the point sees every side at 120.
    Interior,
    /// The triangle vertex (0, 1 or 2 in argument order) whose angle is at
    /// least 120 degrees.
    ObtuseVertex(usize),
}

/// Fermat (Torricelli) point of the triangle `abc`.
///
/// For triangles with all angles below 120 degrees this is the first isogonic
/// center, built as the intersection of the lines joining each vertex to the
/// apex of the equilateral triangle erected outward on the opposite side.
pub fn fermat_point(a: Point, b: Point, c: Point) -> Result<(Point, FermatCase)> {
    let area2 = (b - a).cross(c - a);
    let scale = (b - a).norm() * (c - a).norm();
    if !(area2.abs() > 1e-12 * scale) {
        return Err(Error::Degenerate("Fermat point of a collinear triangle".into()));
    }
    let verts = [a, b, c];
    for i in 0..3 {
        let angle = unsigned_angle(verts[i], verts[(i + 1) % 3], verts[(i + 2) % 3]);
        if angle >= CASE_SPLIT_ANGLE {
            return Ok((verts[i], FermatCase::ObtuseVertex(i)));
        }
    }
    let a_apex = outward_apex(b, c, a);
    let b_apex = outward_apex(c, a, b);
    let f = line_intersection(a, a_apex, b, b_apex)
        .ok_or_else(|| Error::Numeric("isogonic lines are parallel".into()))?;
    Ok((polish(f, &verts), FermatCase::Interior))
}

/// Apex of the equilateral triangle on `uv` lying on the side away from `opposite`.
fn outward_apex(u: Point, v: Point, opposite: Point) -> Point {
    let h = 3f64.sqrt() / 2.0;
    let mid = u.lerp(v, 0.5);
    let d = v - u;
    let normal = Point::new(-d.y, d.x) * h;
    let side = d.cross(opposite - u);
    if side > 0.0 {
        mid - normal
    } else {
        mid + normal
    }
}

fn line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Option<Point> {
    let d1 = p2 - p1;
    let d2 = q2 - q1;
    let den = d1.cross(d2);
    if den == 0.0 {
        return None;
    }
    let t = (q1 - p1).cross(d2) / den;
    Some(p1 + d1 * t)
}

/// Newton steps on the gradient of the summed distances, which vanishes
/// exactly where the three unit vectors to the vertices balance.
fn polish(mut f: Point, verts: &[Point; 3]) -> Point {
    let grad_norm = |f: Point| -> f64 {
        let mut g = Point::ORIGIN;
        for &v in verts {
            let d = f - v;
            g += d * (1.0 / d.norm());
        }
        g.norm()
    };
    let mut gn = grad_norm(f);
    for _ in 0..3 {
        let (mut g, mut hxx, mut hxy, mut hyy) = (Point::ORIGIN, 0.0, 0.0, 0.0);
        for &v in verts {
            let d = f - v;
            let n = d.norm();
            let u = d * (1.0 / n);
            g += u;
            hxx += (1.0 - u.x * u.x) / n;
            hxy += -u.x * u.y / n;
            hyy += (1.0 - u.y * u.y) / n;
        }
        let det = hxx * hyy - hxy * hxy;
        if !(det.abs() > 0.0) || !det.is_finite() {
            break;
        }
        let step = Point::new((hyy * g.x - hxy * g.y) / det, (hxx * g.y - hxy * g.x) / det);
        let next = f - step;
        let next_gn = grad_norm(next);
        if !(next_gn < gn) {
            break;
        }
        f = next;
        gn = next_gn;
    }
    f
}
