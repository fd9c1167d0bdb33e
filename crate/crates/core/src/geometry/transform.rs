use super::Point;
use crate::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// Orientation-preserving similarity `x -> scale * R(rotation) * x + translation`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimilarityTransform {
    pub rotation: f64,
    pub scale: f64,
    pub translation: Point,
}

impl SimilarityTransform {
    pub const IDENTITY: SimilarityTransform = SimilarityTransform {
        rotation: 0.0,
        scale: 1.0,
        translation: Point::ORIGIN,
    };

    /// Panics if `scale` is not a positive finite number.
    pub fn new(rotation: f64, scale: f64, translation: Point) -> Self {
        assert!(scale > 0.0 && scale.is_finite(), "similarity scale must be positive");
        Self {
            rotation,
            scale,
            translation,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        p.rotate(self.rotation) * self.scale + self.translation
    }

    /// Applies only the linear part (for direction vectors).
    pub fn apply_vector(&self, v: Point) -> Point {
        v.rotate(self.rotation) * self.scale
    }

    pub fn apply_inverse(&self, p: Point) -> Point {
        ((p - self.translation) * (1.0 / self.scale)).rotate(-self.rotation)
    }

    pub fn inverse(&self) -> SimilarityTransform {
        let s = 1.0 / self.scale;
        SimilarityTransform {
            rotation: -self.rotation,
            scale: s,
            translation: (-self.translation).rotate(-self.rotation) * s,
        }
    }

    /// `self` after `first`: `x -> self(first(x))`.
    pub fn compose(&self, first: &SimilarityTransform) -> SimilarityTransform {
        SimilarityTransform {
            rotation: self.rotation + first.rotation,
            scale: self.scale * first.scale,
            translation: self.apply(first.translation),
        }
    }
}

/// The similarity sending `a` to `(0, -1)` and `b` to `(0, 1)`.
pub fn canonical_two_point_frame(a: Point, b: Point) -> Result<SimilarityTransform> {
    let d = b - a;
    let len = d.norm();
    if !(len > 0.0) || !len.is_finite() {
        return Err(Error::Degenerate("two-point frame needs distinct points".into()));
    }
    let rotation = FRAC_PI_2 - d.angle();
    let scale = 2.0 / len;
    let mid = a.lerp(b, 0.5);
    let translation = -(mid.rotate(rotation) * scale);
    Ok(SimilarityTransform {
        rotation,
        scale,
        translation,
    })
}
