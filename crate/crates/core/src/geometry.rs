//! Geodesics and axis-centered circles in the upper half-plane.
//!
//! Circles through ∞ (vertical lines) are not represented; operations that
//! would need one report `ImageThroughInfinity` and callers re-frame the
//! configuration by a rotation first.

use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result};
use crate::moebius::{Kind, MoebiusMap};

/// Oriented geodesic; for axes `repelling` → `attracting`.
#[derive(Debug, Clone, Copy)]
pub struct Geodesic {
    pub repelling: BoundaryPoint,
    pub attracting: BoundaryPoint,
}

impl Geodesic {
    pub fn new(repelling: BoundaryPoint, attracting: BoundaryPoint, tol: f64) -> Result<Geodesic> {
        if repelling.chordal(&attracting) <= tol {
            return Err(Error::DegenerateAxis);
        }
        Ok(Geodesic { repelling, attracting })
    }
}

/// Euclidean circle centered on the real axis; its feet are the boundary
/// interval [center − radius, center + radius].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CircleOnAxis {
    pub center: f64,
    pub radius: f64,
}

impl CircleOnAxis {
    pub fn new(center: f64, radius: f64) -> CircleOnAxis {
        debug_assert!(radius > 0.0);
        CircleOnAxis { center, radius }
    }

    pub fn from_feet(u: f64, v: f64) -> CircleOnAxis {
        CircleOnAxis { center: 0.5 * (u + v), radius: 0.5 * (v - u).abs() }
    }

    pub fn left_foot(&self) -> f64 {
        self.center - self.radius
    }

    pub fn right_foot(&self) -> f64 {
        self.center + self.radius
    }

    pub fn contains(&self, t: f64) -> bool {
        (t - self.center).abs() < self.radius
    }

    /// Max chordal mismatch of the two foot pairs.
    pub fn foot_residual(&self, other: &CircleOnAxis) -> f64 {
        let d = |s: f64, t: f64| BoundaryPoint::finite(s).chordal(&BoundaryPoint::finite(t));
        d(self.left_foot(), other.left_foot()).max(d(self.right_foot(), other.right_foot()))
    }
}

/// Axis of a hyperbolic map, oriented repelling → attracting.
pub fn axis(t: &MoebiusMap, tol: f64) -> Result<Geodesic> {
    let (att, rep) = t.fixed_points(tol)?;
    Geodesic::new(rep, att, tol)
}

/// Hyperbolic map with the given axis and translation length, built as the
/// conjugate of diag(e^{t/2}, e^{−t/2}) by any map sending (0, ∞) to (p, q).
pub fn build_hyperbolic(
    p: BoundaryPoint,
    q: BoundaryPoint,
    length: f64,
    tol: f64,
) -> Result<MoebiusMap> {
    if p.chordal(&q) <= tol {
        return Err(Error::DegenerateAxis);
    }
    if length <= 0.0 {
        return Err(Error::NonPositiveLength(length));
    }
    let lambda = (length / 2.0).exp();
    // columns (q | p) send 0 ↦ p and ∞ ↦ q; flip a column sign if the
    // determinant came out negative (the conjugate is unchanged).
    let (mut fa, mut fc) = (q.x, q.y);
    let (fb, fd) = (p.x, p.y);
    if fa * fd - fb * fc < 0.0 {
        fa = -fa;
        fc = -fc;
    }
    let det = fa * fd - fb * fc;
    // S · diag(λ, 1/λ) · S⁻¹ / det(S)
    let (ga, gb, gc, gd) = (fa * lambda, fb / lambda, fc * lambda, fd / lambda);
    MoebiusMap::normalize(
        (ga * fd - gb * fc) / det,
        (gb * fa - ga * fb) / det,
        (gc * fd - gd * fc) / det,
        (gd * fa - gc * fb) / det,
        tol,
    )
}

/// Isometric circle pair of a hyperbolic map not fixing ∞: the first has
/// center −d/c, the second center a/c, both of radius 1/|c|. The map carries
/// the first onto the second, exterior to interior.
pub fn isometric_circles(t: &MoebiusMap, tol: f64) -> Result<(CircleOnAxis, CircleOnAxis)> {
    let kind = t.classify(tol);
    if kind != Kind::Hyperbolic {
        return Err(Error::NotHyperbolic { kind });
    }
    if t.c.abs() <= tol {
        return Err(Error::InfinityFixed);
    }
    let r = t.c.abs().recip();
    Ok((CircleOnAxis::new(-t.d / t.c, r), CircleOnAxis::new(t.a / t.c, r)))
}

/// Möbius image of an axis-centered circle, computed from the images of its
/// feet (which stay real when the pole avoids the circle).
pub fn image_circle(t: &MoebiusMap, circle: &CircleOnAxis, tol: f64) -> Result<CircleOnAxis> {
    if t.c.abs() > tol {
        let pole = -t.d / t.c;
        if ((pole - circle.center).abs() - circle.radius).abs() <= tol {
            return Err(Error::PoleOnCircle);
        }
    }
    let u = t.apply_boundary(BoundaryPoint::finite(circle.left_foot()));
    let v = t.apply_boundary(BoundaryPoint::finite(circle.right_foot()));
    match (u.to_real_tol(tol), v.to_real_tol(tol)) {
        (Some(a), Some(b)) => Ok(CircleOnAxis::from_feet(a, b)),
        _ => Err(Error::ImageThroughInfinity),
    }
}

/// Geodesic with feet (tan φ, −cot φ) for φ ∈ (0, π) \ {π/2}; the two feet
/// multiply to −1, so every such geodesic passes through i.
pub fn geodesic_through(phi: f64, tol: f64) -> Result<Geodesic> {
    use std::f64::consts::{FRAC_PI_2, PI};
    if !(phi > 0.0 && phi < PI) {
        return Err(Error::InvalidParameter("angle must lie in (0, pi)"));
    }
    if (phi - FRAC_PI_2).abs() <= tol {
        return Err(Error::VerticalAxis);
    }
    Geodesic::new(
        BoundaryPoint::finite(phi.tan()),
        BoundaryPoint::finite(-phi.tan().recip()),
        tol,
    )
}
