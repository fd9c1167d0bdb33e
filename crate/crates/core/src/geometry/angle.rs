use super::Point;
use crate::{Error, Result};
use std::f64::consts::TAU;

/// Neighbors closer than this to the query point have no defined direction.
pub const COINCIDENCE_EPS: f64 = 1e-12;

/// Gaps between angularly consecutive directions from `q` to `neighbors`.
///
/// Directions are sorted counter-clockwise; the last gap wraps around, so the
/// gaps always sum to `2*pi`. A single neighbor yields one gap of `2*pi`.
pub fn angular_gaps(q: Point, neighbors: &[Point]) -> Result<Vec<f64>> {
    if neighbors.is_empty() {
        return Err(Error::Degenerate("no neighbors".into()));
    }
    let mut dirs = Vec::with_capacity(neighbors.len());
    for &a in neighbors {
        let d = a - q;
        if d.norm() <= COINCIDENCE_EPS {
            return Err(Error::Degenerate(format!(
                "neighbor ({}, {}) coincides with ({}, {})",
                a.x, a.y, q.x, q.y
            )));
        }
        dirs.push(d.angle());
    }
    dirs.sort_by(f64::total_cmp);
    let mut gaps: Vec<f64> = dirs.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.push(TAU - (dirs[dirs.len() - 1] - dirs[0]));
    Ok(gaps)
}

/// Smallest angle between two edges incident to a vertex placed at `q`.
pub fn min_incident_angle(q: Point, neighbors: &[Point]) -> Result<f64> {
    let gaps = angular_gaps(q, neighbors)?;
    Ok(gaps.into_iter().fold(f64::INFINITY, f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SimilarityTransform;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn opposite_pair_is_straight() {
        let a = min_incident_angle(Point::ORIGIN, &[Point::new(1.0, 0.0), Point::new(-1.0, 0.0)]);
        assert_abs_diff_eq!(a.unwrap(), PI, epsilon = 1e-15);
    }

    #[test]
    fn symmetric_cross() {
        let n = [
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(-1.0, 0.0),
            Point::new(0.0, -1.0),
        ];
        assert_abs_diff_eq!(min_incident_angle(Point::ORIGIN, &n).unwrap(), FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn right_angles_over_horizontal_line() {
        let n = [Point::new(-5.0, 1.0), Point::new(0.0, 6.0), Point::new(5.0, 1.0)];
        let q = Point::new(0.0, 1.0);
        let mut gaps = angular_gaps(q, &n).unwrap();
        gaps.sort_by(f64::total_cmp);
        assert_abs_diff_eq!(gaps[0], FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(gaps[1], FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(gaps[2], PI, epsilon = 1e-15);
        assert_abs_diff_eq!(min_incident_angle(q, &n).unwrap(), FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn single_neighbor_is_full_turn() {
        assert_eq!(min_incident_angle(Point::ORIGIN, &[Point::new(3.0, 4.0)]).unwrap(), TAU);
    }

    #[test]
    fn coincident_neighbor_is_rejected() {
        let q = Point::new(1.0, 1.0);
        assert!(matches!(
            min_incident_angle(q, &[Point::new(1.0, 1.0), Point::new(0.0, 0.0)]),
            Err(Error::Degenerate(_))
        ));
        assert!(min_incident_angle(q, &[]).is_err());
    }

    fn pt() -> impl Strategy<Value = Point> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn gaps_sum_to_full_turn(q in pt(), n in prop::collection::vec(pt(), 1..8)) {
            prop_assume!(n.iter().all(|a| a.dist(q) > 1e-6));
            let s: f64 = angular_gaps(q, &n).unwrap().iter().sum();
            prop_assert!((s - TAU).abs() <= 1e-9);
        }

        #[test]
        fn invariant_under_similarity_and_permutation(
            q in pt(),
            n in prop::collection::vec(pt(), 2..7),
            rot in -PI..PI,
            scale in 0.1..10.0f64,
            t in pt(),
        ) {
            prop_assume!(n.iter().all(|a| a.dist(q) > 1e-3));
            let base = min_incident_angle(q, &n).unwrap();
            let tf = SimilarityTransform::new(rot, scale, t);
            let moved: Vec<Point> = n.iter().map(|&a| tf.apply(a)).collect();
            let m = min_incident_angle(tf.apply(q), &moved).unwrap();
            prop_assert!((m - base).abs() <= 1e-9);
            let mut rev = n.clone();
            rev.reverse();
            prop_assert_eq!(min_incident_angle(q, &rev).unwrap(), base);
        }
    }
}
