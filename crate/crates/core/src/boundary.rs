//! The boundary circle R ∪ {∞} of the upper half-plane, as the real
//! projective line, with the orientation and arc predicates every
//! interval-style argument reduces to.

use crate::error::{Error, Result};

/// Point of R ∪ {∞} as a projective pair (x : y), kept at unit norm with
/// y ≥ 0, and x > 0 when y = 0. Infinity is (1 : 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub x: f64,
    pub y: f64,
}

impl BoundaryPoint {
    pub const INFINITY: BoundaryPoint = BoundaryPoint { x: 1.0, y: 0.0 };

    pub fn finite(t: f64) -> BoundaryPoint {
        BoundaryPoint::from_projective(t, 1.0)
    }

    pub fn from_projective(x: f64, y: f64) -> BoundaryPoint {
        let n = x.hypot(y);
        debug_assert!(n > 0.0, "projective pair must be nonzero");
        let (mut x, mut y) = (x / n, y / n);
        if y < 0.0 || (y == 0.0 && x < 0.0) {
            x = -x;
            y = -y;
        }
        BoundaryPoint { x, y }
    }

    pub fn is_infinite(&self, tol: f64) -> bool {
        self.y.abs() <= tol
    }

    /// Finite value, if the point is not ∞ within `tol`.
    pub fn to_real_tol(&self, tol: f64) -> Option<f64> {
        if self.is_infinite(tol) {
            None
        } else {
            Some(self.x / self.y)
        }
    }

    pub fn to_real(&self) -> Option<f64> {
        self.to_real_tol(crate::DEFAULT_TOL)
    }

    /// Scale-free chordal distance |x₁y₂ − x₂y₁| on the projective circle.
    pub fn chordal(&self, other: &BoundaryPoint) -> f64 {
        (self.x * other.y - other.x * self.y).abs()
    }

    /// Angle coordinate in [0, π): ∞ ↦ 0, finite t ↦ atan2(1, t).
    /// Arc-length parameter of the chordal metric; used for deterministic
    /// interior-point picks, never for verdicts.
    pub fn theta(&self) -> f64 {
        let t = self.y.atan2(self.x);
        if t < 0.0 {
            t + std::f64::consts::PI
        } else if t >= std::f64::consts::PI {
            t - std::f64::consts::PI
        } else {
            t
        }
    }

    pub fn from_theta(theta: f64) -> BoundaryPoint {
        BoundaryPoint::from_projective(theta.cos(), theta.sin())
    }
}

/// Orientation of an ordered triple: +1 when positively oriented (increasing
/// along R, then ∞), −1 otherwise, 0 when two arguments coincide within tol.
pub fn cyclic_order(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint, tol: f64) -> i32 {
    let pq = p.x * q.y - q.x * p.y;
    let qr = q.x * r.y - r.x * q.y;
    let rp = r.x * p.y - p.x * r.y;
    if pq.abs() <= tol || qr.abs() <= tol || rp.abs() <= tol {
        return 0;
    }
    if pq * qr * rp > 0.0 {
        1
    } else {
        -1
    }
}

/// Whether the endpoint pairs interleave around the circle (the geodesics
/// joining them cross). Errors when any two of the four points coincide.
pub fn pairs_linked(
    pair1: (BoundaryPoint, BoundaryPoint),
    pair2: (BoundaryPoint, BoundaryPoint),
    tol: f64,
) -> Result<bool> {
    let pts = [pair1.0, pair1.1, pair2.0, pair2.1];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i].chordal(&pts[j]) <= tol {
                return Err(Error::SharedEndpoint);
            }
        }
    }
    let s1 = cyclic_order(pair1.0, pair2.0, pair1.1, tol);
    let s2 = cyclic_order(pair1.0, pair2.1, pair1.1, tol);
    Ok(s1 != s2)
}

/// True iff `p` lies in the open arc bounded by `u`, `v` that does not
/// contain `w`.
pub fn point_in_arc(
    p: BoundaryPoint,
    u: BoundaryPoint,
    v: BoundaryPoint,
    w: BoundaryPoint,
    tol: f64,
) -> Result<bool> {
    if u.chordal(&v) <= tol || u.chordal(&w) <= tol || v.chordal(&w) <= tol {
        return Err(Error::DegenerateArc);
    }
    if p.chordal(&u) <= tol || p.chordal(&v) <= tol {
        return Err(Error::DegenerateArc);
    }
    Ok(cyclic_order(u, p, v, tol) != cyclic_order(u, w, v, tol))
}

/// Interior point of the open arc from `u` to `v` avoiding `w`, at fraction
/// `frac` ∈ (0, 1) of the arc's chordal parameter starting from `u`.
pub fn arc_point(
    u: BoundaryPoint,
    v: BoundaryPoint,
    w: BoundaryPoint,
    frac: f64,
    tol: f64,
) -> Result<BoundaryPoint> {
    if u.chordal(&v) <= tol || u.chordal(&w) <= tol || v.chordal(&w) <= tol {
        return Err(Error::DegenerateArc);
    }
    let pi = std::f64::consts::PI;
    let tu = u.theta();
    let sweep = (v.theta() - tu).rem_euclid(pi);
    let wu = (w.theta() - tu).rem_euclid(pi);
    // the increasing-theta arc from u contains w iff wu < sweep
    let p = if wu < sweep {
        BoundaryPoint::from_theta(tu - frac * (pi - sweep))
    } else {
        BoundaryPoint::from_theta(tu + frac * sweep)
    };
    Ok(p)
}

pub fn arc_midpoint(
    u: BoundaryPoint,
    v: BoundaryPoint,
    w: BoundaryPoint,
    tol: f64,
) -> Result<BoundaryPoint> {
    arc_point(u, v, w, 0.5, tol)
}

/// Fraction in (0, 1) at which `p` sits along the arc from `u` to `v`
/// avoiding `w`. Errors unless `p` lies in that open arc.
pub fn arc_fraction(
    u: BoundaryPoint,
    v: BoundaryPoint,
    w: BoundaryPoint,
    p: BoundaryPoint,
    tol: f64,
) -> Result<f64> {
    if !point_in_arc(p, u, v, w, tol)? {
        return Err(Error::DegenerateArc);
    }
    let pi = std::f64::consts::PI;
    let tu = u.theta();
    let sweep = (v.theta() - tu).rem_euclid(pi);
    let wu = (w.theta() - tu).rem_euclid(pi);
    let pu = (p.theta() - tu).rem_euclid(pi);
    Ok(if wu < sweep {
        // arc runs in decreasing theta, sweep pi - sweep
        (pi - pu) / (pi - sweep)
    } else {
        pu / sweep
    })
}
