//! Boundary points where the two angles at a chosen apex neighbor are equal.
//!
//! With `p` at the origin and the outer neighbors `A`, `C` on a horizontal
//! line, equal cosines of `A p* B` and `B p* C` give a cubic in `(x, y)`.
//! Eliminating `y` with `x^2 + y^2 = r^2` and squaring yields a sextic in `x`
//! that always carries the factor `x^2 + A_y^2 - r^2` (the points of the
//! circle on the line `AC` satisfy the squared equation trivially). After
//! rescaling so that `A_y^2 - r^2` is `0`, `1` or `-1`, dividing the factor
//! out leaves a quartic.

use crate::geometry::{Point, SimilarityTransform};
use crate::poly::{real_roots, Polynomial};

/// `|A_y^2 - r^2| <= CASE_I_TOL * r^2` selects the tangent-line case.
pub const CASE_I_TOL: f64 = 1e-9;
const CIRCLE_TOL: f64 = 1e-7;
const EQUAL_COS_TOL: f64 = 1e-6;
const DENOM_TOL: f64 = 1e-9;

/// Which quadratic factor the sextic carries after rescaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorCase {
    /// `A_y^2 = r^2`: factor `x^2`.
    I,
    /// `A_y^2 - r^2 = 1`: factor `x^2 + 1`.
    II,
    /// `A_y^2 - r^2 = -1`: factor `x^2 - 1`.
    III,
}

/// The full coefficient cascade for one apex choice.
#[derive(Clone, Debug)]
pub struct EqualPairReduction {
    pub a: [f64; 6],
    pub b: [f64; 6],
    pub c: [f64; 10],
    pub d: [f64; 7],
    pub e: [f64; 7],
    pub case: FactorCase,
    /// Uniform scale applied after centering and rotating.
    pub scale_applied: f64,
    /// Original frame to working frame.
    pub frame: SimilarityTransform,
    /// Radius in the working frame.
    pub r: f64,
    /// Neighbor positions in the working frame (`A_y == C_y`).
    pub pa: Point,
    pub pb: Point,
    pub pc: Point,
}

impl EqualPairReduction {
    pub fn new(p: Point, a: Point, apex: Point, c: Point, r: f64) -> Self {
        let rotation = -(c - a).angle();
        let (mut pa, mut pb, mut pc) = ((a - p).rotate(rotation), (apex - p).rotate(rotation), (c - p).rotate(rotation));
        let ay = 0.5 * (pa.y + pc.y);
        pa.y = ay;
        pc.y = ay;

        let s2 = ay * ay - r * r;
        let (case, k) = if s2.abs() <= CASE_I_TOL * r * r {
            (FactorCase::I, 1.0)
        } else if s2 > 0.0 {
            (FactorCase::II, 1.0 / s2.sqrt())
        } else {
            (FactorCase::III, 1.0 / (-s2).sqrt())
        };
        pa = pa * k;
        pb = pb * k;
        pc = pc * k;
        let r = r * k;
        let frame = SimilarityTransform {
            rotation,
            scale: k,
            translation: -(p.rotate(rotation) * k),
        };

        let r2 = r * r;
        let (ax, ay, bx, by, cx, cy) = (pa.x, pa.y, pb.x, pb.y, pc.x, pc.y);
        // |CP*|^2 and (B-P*).(A-P*) as linear forms in (x, y) on the circle.
        let av = [
            -2.0 * cx,
            -2.0 * cy,
            r2 + cx * cx + cy * cy,
            -(ax + bx),
            -(ay + by),
            bx * ax + by * ay + r2,
        ];
        // |AP*|^2 and (B-P*).(C-P*).
        let bv = [
            -2.0 * ax,
            -2.0 * ay,
            r2 + ax * ax + ay * ay,
            -(bx + cx),
            -(by + cy),
            bx * cx + by * cy + r2,
        ];
        let [a1, a2, a3, a4, a5, a6] = av;
        let [b1, b2, b3, b4, b5, b6] = bv;
        let cv = [
            a1 * a4 * a4 - b1 * b4 * b4,
            a2 * a5 * a5 - b2 * b5 * b5,
            2.0 * a1 * a4 * a6 + a3 * a4 * a4 - (2.0 * b1 * b4 * b6 + b3 * b4 * b4),
            2.0 * a2 * a5 * a6 + a3 * a5 * a5 - (2.0 * b2 * b5 * b6 + b3 * b5 * b5),
            2.0 * a1 * a4 * a5 + a2 * a4 * a4 - (2.0 * b1 * b4 * b5 + b2 * b4 * b4),
            2.0 * a2 * a4 * a5 + a1 * a5 * a5 - (2.0 * b2 * b4 * b5 + b1 * b5 * b5),
            2.0 * a3 * a4 * a6 + a1 * a6 * a6 - (2.0 * b3 * b4 * b6 + b1 * b6 * b6),
            2.0 * a3 * a5 * a6 + a2 * a6 * a6 - (2.0 * b3 * b5 * b6 + b2 * b6 * b6),
            2.0 * (a1 * a5 * a6 + a2 * a4 * a6 + a3 * a4 * a5 - (b1 * b5 * b6 + b2 * b4 * b6 + b3 * b4 * b5)),
            a3 * a6 * a6 - b3 * b6 * b6,
        ];
        let [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10] = cv;
        // y^2 = r^2 - x^2 leaves (d1 x^3 + d2 x^2 + d3 x + d4) + (d5 x^2 + d6 x + d7) y = 0.
        let dv = [c1 - c6, c3 - c4, c6 * r2 + c7, c4 * r2 + c10, c5 - c2, c9, c2 * r2 + c8];
        let [d1, d2, d3, d4, d5, d6, d7] = dv;
        let ev = [
            d1 * d1 + d5 * d5,
            2.0 * (d1 * d2 + d5 * d6),
            d2 * d2 + 2.0 * d1 * d3 - (d5 * d5 * r2 - (d6 * d6 + 2.0 * d5 * d7)),
            2.0 * (d1 * d4 + d2 * d3) - (2.0 * d5 * d6 * r2 - 2.0 * d6 * d7),
            d3 * d3 + 2.0 * d2 * d4 - ((d6 * d6 + 2.0 * d5 * d7) * r2 - d7 * d7),
            2.0 * d3 * d4 - 2.0 * d6 * d7 * r2,
            d4 * d4 - d7 * d7 * r2,
        ];
        Self {
            a: av,
            b: bv,
            c: cv,
            d: dv,
            e: ev,
            case,
            scale_applied: k,
            frame,
            r,
            pa,
            pb,
            pc,
        }
    }

    /// `e1 x^6 + ... + e7`.
    pub fn sextic(&self) -> Polynomial {
        Polynomial::from_descending(&self.e)
    }

    pub fn factor(&self) -> Polynomial {
        match self.case {
            FactorCase::I => Polynomial::from_descending(&[1.0, 0.0, 0.0]),
            FactorCase::II => Polynomial::from_descending(&[1.0, 0.0, 1.0]),
            FactorCase::III => Polynomial::from_descending(&[1.0, 0.0, -1.0]),
        }
    }

    /// Quotient of the sextic by the case factor. In case I only one power of
    /// `x` is removed so that `x = 0` stays a candidate.
    pub fn quartic(&self) -> Polynomial {
        let [e1, e2, e3, e4, e5, _, _] = self.e;
        match self.case {
            FactorCase::I => Polynomial::from_descending(&[e1, e2, e3, e4, 0.0]),
            FactorCase::II => {
                Polynomial::from_descending(&[e1, e2, e3 - e1, e4 - e2, e5 - (e3 - e1)])
            }
            FactorCase::III => {
                Polynomial::from_descending(&[e1, e2, e3 + e1, e4 + e2, e5 + (e3 + e1)])
            }
        }
    }

    /// Boundary points (working frame) with equal angles at the apex.
    pub fn working_candidates(&self) -> Vec<Point> {
        let r = self.r;
        let Ok(xs) = real_roots(&self.quartic(), -r, r) else {
            return vec![];
        };
        let [d1, d2, d3, d4, d5, d6, d7] = self.d;
        let den_scale = d5.abs() * r * r + d6.abs() * r + d7.abs();
        let mut out = Vec::new();
        for x in xs {
            let num = ((d1 * x + d2) * x + d3) * x + d4;
            let den = (d5 * x + d6) * x + d7;
            let ys: Vec<f64> = if den_scale == 0.0 || den.abs() < DENOM_TOL * den_scale {
                let h = (r * r - x * x).max(0.0).sqrt();
                vec![h, -h]
            } else {
                vec![-num / den]
            };
            for y in ys {
                let q = Point::new(x, y);
                if (q.norm_sq() - r * r).abs() <= CIRCLE_TOL * r * r && self.equal_cosines(q) {
                    out.push(q);
                }
            }
        }
        out
    }

    /// The unsquared equal-angle condition, normalized to cosines.
    fn equal_cosines(&self, q: Point) -> bool {
        let (u, v, w) = (self.pa - q, self.pb - q, self.pc - q);
        let (nu, nv, nw) = (u.norm(), v.norm(), w.norm());
        if nu == 0.0 || nv == 0.0 || nw == 0.0 {
            return false;
        }
        let cos_ab = u.dot(v) / (nu * nv);
        let cos_bc = v.dot(w) / (nv * nw);
        (cos_ab - cos_bc).abs() <= EQUAL_COS_TOL
    }
}

/// Candidate positions on `|p p*| = r` where the angles `a p* apex` and
/// `apex p* c` are equal. Empty when no root survives the checks.
pub fn solve_equal_pair(p: Point, a: Point, apex: Point, c: Point, r: f64) -> Vec<Point> {
    if a.dist(c) == 0.0 {
        return vec![];
    }
    let red = EqualPairReduction::new(p, a, apex, c, r);
    red.working_candidates()
        .into_iter()
        .map(|q| {
            let pt = red.frame.apply_inverse(q);
            let d = pt.dist(p);
            if d > 0.0 {
                p + (pt - p) * (r / d)
            } else {
                pt
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::unsigned_angle;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, TAU};

    fn random_instance(rng: &mut ChaCha8Rng) -> (Point, Point, Point, Point, f64) {
        let r = rng.gen_range(0.2..3.0);
        let p = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let mut nb = || {
            let t: f64 = rng.gen_range(0.0..TAU);
            p + Point::new(t.cos(), t.sin()) * (r * rng.gen_range(2.0..10.0))
        };
        (p, nb(), nb(), nb(), r)
    }

    #[test]
    fn symmetric_instance_contains_top_point() {
        let p = Point::ORIGIN;
        let (a, b, c) = (Point::new(-5.0, 1.0), Point::new(0.0, 6.0), Point::new(5.0, 1.0));
        let red = EqualPairReduction::new(p, a, b, c, 1.0);
        assert_eq!(red.case, FactorCase::I);
        assert_abs_diff_eq!(red.quartic().eval(0.0), 0.0);
        let got = solve_equal_pair(p, a, b, c, 1.0);
        let top = got.iter().find(|q| q.dist(Point::new(0.0, 1.0)) < 1e-9);
        let top = top.expect("(0, 1) among candidates");
        assert_abs_diff_eq!(unsigned_angle(*top, a, b), FRAC_PI_2, epsilon = 1e-9);
        assert_abs_diff_eq!(unsigned_angle(*top, b, c), FRAC_PI_2, epsilon = 1e-9);
    }

    #[test]
    fn c_coefficients_expand_the_squared_equation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (p, a, b, c, r) = random_instance(&mut rng);
            let red = EqualPairReduction::new(p, a, b, c, r);
            let [a1, a2, a3, a4, a5, a6] = red.a;
            let [b1, b2, b3, b4, b5, b6] = red.b;
            let (x, y) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let direct = (a1 * x + a2 * y + a3) * (a4 * x + a5 * y + a6).powi(2)
                - (b1 * x + b2 * y + b3) * (b4 * x + b5 * y + b6).powi(2);
            let c = red.c;
            let via_c = c[0] * x.powi(3) + c[1] * y.powi(3) + c[2] * x * x + c[3] * y * y
                + c[4] * x * x * y + c[5] * x * y * y + c[6] * x + c[7] * y + c[8] * x * y + c[9];
            let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs())) * 64.0;
            assert!((direct - via_c).abs() <= 1e-12 * scale, "{direct} vs {via_c}");
        }
    }

    #[test]
    fn linear_forms_match_distances_on_circle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (p, a, b, c, r) = random_instance(&mut rng);
        let red = EqualPairReduction::new(p, a, b, c, r);
        let t: f64 = 0.37;
        let q = Point::new(t.cos(), t.sin()) * red.r;
        let [a1, a2, a3, a4, a5, a6] = red.a;
        let [b1, b2, b3, ..] = red.b;
        assert_abs_diff_eq!(a1 * q.x + a2 * q.y + a3, (red.pc - q).norm_sq(), epsilon = 1e-9);
        assert_abs_diff_eq!(b1 * q.x + b2 * q.y + b3, (red.pa - q).norm_sq(), epsilon = 1e-9);
        assert_abs_diff_eq!(a4 * q.x + a5 * q.y + a6, (red.pb - q).dot(red.pa - q), epsilon = 1e-9);
    }

    #[test]
    fn e_coefficients_recompose_from_d() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (p, a, b, c, r) = random_instance(&mut rng);
            let red = EqualPairReduction::new(p, a, b, c, r);
            let [d1, d2, d3, d4, d5, d6, d7] = red.d;
            let u = Polynomial::from_descending(&[d1, d2, d3, d4]);
            let v = Polynomial::from_descending(&[d5, d6, d7]);
            let circ = Polynomial::from_descending(&[-1.0, 0.0, red.r * red.r]);
            let sextic = u.mul(&u);
            let sub = v.mul(&v).mul(&circ);
            let mut want = vec![0.0; 7];
            for (i, w) in want.iter_mut().enumerate() {
                *w = sextic.coeffs().get(i).copied().unwrap_or(0.0) - sub.coeffs().get(i).copied().unwrap_or(0.0);
            }
            let got = red.sextic();
            let scale = red.e.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for i in 0..7 {
                let g = got.coeffs().get(i).copied().unwrap_or(0.0);
                assert!((g - want[i]).abs() <= 1e-6 * scale);
            }
        }
    }

    #[test]
    fn candidates_match_boundary_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = 0;
        for _ in 0..300 {
            let (p, a, b, c, r) = random_instance(&mut rng);
            let red = EqualPairReduction::new(p, a, b, c, r);
            let sextic = red.sextic();
            let smax = sextic.max_abs_coeff();
            for q in red.working_candidates() {
                let xr = q.x.abs().max(1.0).powi(6);
                assert!(sextic.eval(q.x).abs() <= 1e-6 * smax * xr);
            }
            let found = solve_equal_pair(p, a, b, c, r);
            for q in &found {
                assert_abs_diff_eq!(q.dist(p), r, epsilon = 1e-7 * r);
                let (ab, bc) = (unsigned_angle(*q, a, b), unsigned_angle(*q, b, c));
                assert!((ab - bc).abs() <= 1e-5, "{ab} vs {bc}");
            }
            // sign changes of cos(AQB) - cos(BQC) around the circle
            let diff = |t: f64| {
                let q = p + Point::new(t.cos(), t.sin()) * r;
                let (u, v, w) = (a - q, b - q, c - q);
                u.dot(v) / (u.norm() * v.norm()) - v.dot(w) / (v.norm() * w.norm())
            };
            let n = 20_000;
            let step = TAU / n as f64;
            for i in 0..n {
                let (t0, t1) = (i as f64 * step, (i + 1) as f64 * step);
                let z = p + Point::new(t0.cos(), t0.sin()) * r;
                // on line AC with A and C on the same side the equality is trivial
                let trivial = unsigned_angle(z, a, c) < 1e-3;
                if diff(t0).signum() != diff(t1).signum() && !trivial {
                    seen += 1;
                    let near = found.iter().any(|q| q.dist(z) <= 2.0 * step * r);
                    assert!(near, "missed boundary root near {z:?}");
                }
            }
        }
        assert!(seen > 20);
    }
}
