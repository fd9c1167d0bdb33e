//! Brute-force MMA solver by dense sampling of the displacement disk.
//!
//! The oracle shares nothing with the exact solvers beyond [`Point`]: it
//! scores sample points with its own angle evaluation and keeps the first
//! best sample in a fixed scan order. Its value lower-bounds the optimum.

use crate::geometry::{min_incident_angle, unsigned_angle, Point};
use crate::solver::{DisplacementQuery, DisplacementResult, Method};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingPlan {
    /// Angular positions per ring (and on the boundary circle).
    pub boundary_samples: usize,
    /// Concentric radii `r * i / (disk_rings - 1)`, including radius 0.
    pub disk_rings: usize,
    /// `0` samples at fixed angles; any other seed rotates each ring by a
    /// random phase.
    pub seed: u64,
}

impl SamplingPlan {
    /// 4096 x 64, fast enough for unit tests.
    pub const CI: SamplingPlan = SamplingPlan {
        boundary_samples: 4096,
        disk_rings: 64,
        seed: 0,
    };
    /// 10^5 x 256.
    pub const ACCEPTANCE: SamplingPlan = SamplingPlan {
        boundary_samples: 100_000,
        disk_rings: 256,
        seed: 0,
    };

    pub fn new(boundary_samples: usize, disk_rings: usize, seed: u64) -> Self {
        assert!(boundary_samples >= 8, "need at least 8 boundary samples");
        Self {
            boundary_samples,
            disk_rings: disk_rings.max(1),
            seed,
        }
    }

    fn ring_phases(&self) -> Vec<f64> {
        if self.seed == 0 {
            return vec![0.0; self.disk_rings];
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let step = TAU / self.boundary_samples as f64;
        (0..self.disk_rings).map(|_| rng.gen_range(0.0..step)).collect()
    }
}

/// Best sampled position over the closed disk.
pub fn oracle_solve(q: &DisplacementQuery, plan: SamplingPlan) -> DisplacementResult {
    if q.neighbors.len() <= 1 {
        return DisplacementResult::unchanged(q.p, &q.neighbors);
    }
    let n = plan.boundary_samples;
    let (cos_t, sin_t): (Vec<f64>, Vec<f64>) = (0..n)
        .map(|j| (TAU * j as f64 / n as f64).sin_cos())
        .map(|(s, c)| (c, s))
        .unzip();
    let phases = plan.ring_phases();
    let mut best_pt = q.p;
    let mut best = score(q.p, &q.neighbors);

    const BLOCK: usize = 1024;
    let (mut xs, mut ys, mut buf) = ([0.0; BLOCK], [0.0; BLOCK], [0.0; BLOCK]);
    for ring in 1..plan.disk_rings {
        let rho = if plan.disk_rings == 1 {
            q.r
        } else {
            q.r * ring as f64 / (plan.disk_rings - 1) as f64
        };
        let (sp, cp) = phases[ring].sin_cos();
        for start in (0..n).step_by(BLOCK) {
            let m = BLOCK.min(n - start);
            let (cs, ss) = (&cos_t[start..start + m], &sin_t[start..start + m]);
            for j in 0..m {
                xs[j] = q.p.x + rho * (cs[j] * cp - ss[j] * sp);
                ys[j] = q.p.y + rho * (ss[j] * cp + cs[j] * sp);
            }
            let (xs, ys) = (&xs[..m], &ys[..m]);
            if q.neighbors.len() <= 3 {
                pair_cos_batch(xs, ys, &q.neighbors, &mut buf[..m]);
                for j in 0..m {
                    // the batch skips the coincidence check; confirm improvements exactly
                    if -buf[j] > best {
                        let pt = Point::new(xs[j], ys[j]);
                        let s = score(pt, &q.neighbors);
                        if s > best {
                            best = s;
                            best_pt = pt;
                        }
                    }
                }
            } else {
                for j in 0..m {
                    let pt = Point::new(xs[j], ys[j]);
                    let s = score(pt, &q.neighbors);
                    if s > best {
                        best = s;
                        best_pt = pt;
                    }
                }
            }
        }
    }
    match min_incident_angle(best_pt, &q.neighbors) {
        Ok(min_angle) => DisplacementResult {
            p_star: best_pt,
            min_angle,
            method: Method::Grid,
            degenerate: false,
        },
        Err(_) => DisplacementResult::degenerate(q.p),
    }
}

/// Sampled maximizer of the angle `A q B` over the boundary circle only.
pub fn oracle_max_pair_angle(p: Point, a: Point, b: Point, r: f64, plan: SamplingPlan) -> Point {
    let n = plan.boundary_samples;
    let phase = plan.ring_phases().last().copied().unwrap_or(0.0);
    let mut best = f64::NEG_INFINITY;
    let mut best_pt = p;
    for j in 0..n {
        let t = phase + TAU * j as f64 / n as f64;
        let q = p + Point::new(t.cos(), t.sin()) * r;
        let ang = unsigned_angle(q, a, b);
        if ang > best {
            best = ang;
            best_pt = q;
        }
    }
    best_pt
}

/// Monotone surrogate of the smallest angle at `q`; larger is better.
fn score(q: Point, neighbors: &[Point]) -> f64 {
    if neighbors.len() <= 3 {
        return -max_pair_cos(q, neighbors);
    }
    let mut dirs = Vec::with_capacity(neighbors.len());
    for &a in neighbors {
        let d = a - q;
        if d.x == 0.0 && d.y == 0.0 {
            return f64::NEG_INFINITY;
        }
        dirs.push(d.y.atan2(d.x));
    }
    dirs.sort_by(f64::total_cmp);
    let mut min_gap = TAU + dirs[0] - dirs[dirs.len() - 1];
    for w in dirs.windows(2) {
        min_gap = min_gap.min(w[1] - w[0]);
    }
    // Map onto the same scale as the cosine surrogate.
    -min_gap.cos()
}

/// Branch-free [`max_pair_cos`] over sample coordinates, for two or three
/// neighbors. Coincident samples yield meaningless values.
fn pair_cos_batch(xs: &[f64], ys: &[f64], neighbors: &[Point], out: &mut [f64]) {
    #[inline(always)]
    fn max(a: f64, b: f64) -> f64 {
        if a > b {
            a
        } else {
            b
        }
    }
    let (a, b) = (neighbors[0], neighbors[1]);
    if neighbors.len() == 2 {
        for ((o, &x), &y) in out.iter_mut().zip(xs).zip(ys) {
            let (ux, uy, vx, vy) = (a.x - x, a.y - y, b.x - x, b.y - y);
            *o = (ux * vx + uy * vy) / ((ux * ux + uy * uy) * (vx * vx + vy * vy)).sqrt();
        }
    } else {
        let c = neighbors[2];
        for ((o, &x), &y) in out.iter_mut().zip(xs).zip(ys) {
            let (ux, uy, vx, vy, wx, wy) = (a.x - x, a.y - y, b.x - x, b.y - y, c.x - x, c.y - y);
            let nu = (ux * ux + uy * uy).sqrt();
            let nv = (vx * vx + vy * vy).sqrt();
            let nw = (wx * wx + wy * wy).sqrt();
            // one reciprocal for all three pairs: cos(u, v) = (u.v) |w| / (|u||v||w|)
            let inv = 1.0 / (nu * nv * nw);
            let uv = (ux * vx + uy * vy) * nw;
            let uw = (ux * wx + uy * wy) * nv;
            let vw = (vx * wx + vy * wy) * nu;
            *o = max(max(uv, uw), vw) * inv;
        }
    }
}

/// With at most three directions the smallest angular gap equals the
/// smallest pairwise angle, so the largest pairwise cosine ranks positions.
#[inline]
fn max_pair_cos(q: Point, neighbors: &[Point]) -> f64 {
    let mut units = [Point::ORIGIN; 3];
    for (u, &a) in units.iter_mut().zip(neighbors) {
        let d = a - q;
        let n = (d.x * d.x + d.y * d.y).sqrt();
        if n == 0.0 {
            return f64::INFINITY;
        }
        *u = d * (1.0 / n);
    }
    match neighbors.len() {
        2 => units[0].dot(units[1]),
        _ => units[0]
            .dot(units[1])
            .max(units[0].dot(units[2]))
            .max(units[1].dot(units[2])),
    }
}
