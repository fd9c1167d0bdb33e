//! Real-coefficient polynomials and real-root extraction.
//!
//! Quadratics use the closed form. Higher degrees are handled by recursive
//! isolation: the real roots of the derivative split the interval into
//! monotone pieces, each bracketed root is refined by bisection, and critical
//! points whose residual is already negligible are reported as (even
//! multiplicity) roots. Every root gets one Newton polish step.

use crate::{Error, Result};

/// Coefficient-scaled residual tolerance used to accept a root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;
/// Roots closer than this fraction of the search interval are merged.
pub const ROOT_CLUSTER_TOL: f64 = 1e-7;

/// Polynomial with ascending coefficients; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from descending coefficients, highest power first.
    pub fn from_descending(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots.iter().fold(Polynomial::new(vec![1.0]), |acc, &x| {
            acc.mul(&Polynomial::new(vec![-x, 1.0]))
        })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(vec![]);
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::new(vec![]), self.clone()));
        }
        let mut quot = vec![0.0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
            rem[k + dd] = 0.0;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Residual bound accepted at `x`: `tol * max|c| * max(1, |x|)^deg`.
    pub fn residual_bound(&self, x: f64) -> f64 {
        let deg = self.degree().unwrap_or(0) as i32;
        ROOT_RESIDUAL_TOL * self.max_abs_coeff() * x.abs().max(1.0).powi(deg)
    }

    /// Cauchy bound: every complex root has modulus below this.
    fn cauchy_bound(&self) -> f64 {
        let n = self.coeffs.len() - 1;
        let lead = self.coeffs[n].abs();
        1.0 + self.coeffs[..n]
            .iter()
            .fold(0.0, |m: f64, c| m.max(c.abs() / lead))
    }
}

/// All real roots of `p` in the closed interval `[lo, hi]`, ascending, with
/// multiplicities collapsed. Infinite bounds are allowed.
pub fn real_roots(p: &Polynomial, lo: f64, hi: f64) -> Result<Vec<f64>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Numeric("non-finite polynomial coefficient".into()));
    }
    if deg == 0 || lo > hi {
        return Ok(vec![]);
    }
    let bound = p.cauchy_bound();
    let a = lo.max(-bound);
    let b = hi.min(bound);
    if a > b {
        return Ok(vec![]);
    }
    let mut roots: Vec<f64> = isolate(p, a, b)
        .into_iter()
        .map(|x| polish(p, x).clamp(a, b))
        .collect();
    roots.sort_by(f64::total_cmp);

    let merge = ROOT_CLUSTER_TOL * (b - a);
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for x in roots {
        match out.last_mut() {
            Some(prev) if x - *prev <= merge => {
                if p.eval(x).abs() < p.eval(*prev).abs() {
                    *prev = x;
                }
            }
            _ => out.push(x),
        }
    }
    Ok(out)
}

fn isolate(p: &Polynomial, a: f64, b: f64) -> Vec<f64> {
    match p.degree() {
        None | Some(0) => vec![],
        Some(1) => {
            let x = -p.coeffs[0] / p.coeffs[1];
            if (a..=b).contains(&x) {
                vec![x]
            } else {
                vec![]
            }
        }
        Some(2) => quadratic_roots(p)
            .into_iter()
            .filter(|x| (a..=b).contains(x))
            .collect(),
        Some(_) => {
            let mut breaks = vec![a];
            let mut crit = isolate(&p.derivative(), a, b);
            crit.sort_by(f64::total_cmp);
            breaks.extend(crit);
            breaks.push(b);
            let vals: Vec<f64> = breaks.iter().map(|&x| p.eval(x)).collect();
            let mut roots = Vec::new();
            let flips = |u: f64, v: f64| u != 0.0 && v != 0.0 && (u < 0.0) != (v < 0.0);
            for (i, (&x, &v)) in breaks.iter().zip(&vals).enumerate() {
                let interior = i > 0 && i + 1 < breaks.len();
                // an extremum between two sign changes is not a root, however small
                let touching = interior
                    && v.abs() <= p.residual_bound(x)
                    && !(flips(vals[i - 1], v) && flips(v, vals[i + 1]));
                if v == 0.0 || touching {
                    roots.push(x);
                }
            }
            for i in 0..breaks.len() - 1 {
                let (fa, fb) = (vals[i], vals[i + 1]);
                if fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
                    roots.push(bisect(p, breaks[i], breaks[i + 1], fa));
                }
            }
            roots
        }
    }
}

fn quadratic_roots(p: &Polynomial) -> Vec<f64> {
    let (c, b, a) = (p.coeffs[0], p.coeffs[1], p.coeffs[2]);
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // Tiny negative discriminants come from rounding around a double root.
        let v = -b / (2.0 * a);
        return if p.eval(v).abs() <= p.residual_bound(v) {
            vec![v]
        } else {
            vec![]
        };
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![0.0];
    }
    vec![q / a, c / q]
}

fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let lo_neg = f_lo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if p.eval(lo).abs() <= p.eval(hi).abs() {
        lo
    } else {
        hi
    }
}

fn polish(p: &Polynomial, x: f64) -> f64 {
    let fx = p.eval(x);
    let dfx = p.derivative().eval(x);
    if fx == 0.0 || dfx == 0.0 {
        return x;
    }
    let y = x - fx / dfx;
    if y.is_finite() && p.eval(y).abs() < fx.abs() {
        y
    } else {
        x
    }
}
