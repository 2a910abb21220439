//! Real Möbius transformations as determinant-one 2×2 matrices up to sign.
//!
//! The stored representative is canonical: the trace is positive, or when the
//! trace vanishes the first nonzero of (a, b, c) is positive. Two maps are the
//! same transformation iff their canonical entries agree entrywise.

use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

/// Orientation-preserving isometry of the upper half-plane.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MoebiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Conjugacy type, decided by the absolute trace against 2 with tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl MoebiusMap {
    pub const IDENTITY: MoebiusMap = MoebiusMap { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    /// Normalizes a raw matrix to determinant one and canonical sign.
    ///
    /// Rejects singular and orientation-reversing input (det ≤ tol).
    pub fn normalize(a: f64, b: f64, c: f64, d: f64, tol: f64) -> Result<MoebiusMap> {
        let det = a * d - b * c;
        if !(det > tol) {
            return Err(Error::NonOrientable { det });
        }
        let s = det.sqrt().recip();
        Ok(MoebiusMap { a: a * s, b: b * s, c: c * s, d: d * s }.canonical(tol))
    }

    fn canonical(self, tol: f64) -> MoebiusMap {
        let tr = self.a + self.d;
        let flip = if tr > tol {
            false
        } else if tr < -tol {
            true
        } else {
            // trace ~ 0: first nonzero of (a, b, c) made positive
            let lead = [self.a, self.b, self.c]
                .into_iter()
                .find(|x| x.abs() > tol)
                .unwrap_or(self.d);
            lead < 0.0
        };
        if flip {
            MoebiusMap { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
        } else {
            self
        }
    }

    /// Composition `self ∘ other` (matrix product), renormalized.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let (a, b, c, d) = mul(
            (self.a, self.b, self.c, self.d),
            (other.a, other.b, other.c, other.d),
        );
        // product of det-1 matrices; rescale to absorb rounding drift, but
        // only while the computed determinant is trustworthy — for entries
        // of magnitude N the cancellation error in ad − bc is about ε·N²,
        // and rescaling by a garbage value would wreck the matrix
        let det = a * d - b * c;
        let s = if det > 0.25 && det < 4.0 { det.sqrt().recip() } else { 1.0 };
        MoebiusMap { a: a * s, b: b * s, c: c * s, d: d * s }.canonical(DEFAULT_TOL)
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }.canonical(DEFAULT_TOL)
    }

    /// Signed trace of the canonical representative.
    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Entrywise agreement of canonical representatives.
    pub fn approx_eq(&self, other: &MoebiusMap, tol: f64) -> bool {
        (self.a - other.a).abs() <= tol
            && (self.b - other.b).abs() <= tol
            && (self.c - other.c).abs() <= tol
            && (self.d - other.d).abs() <= tol
    }

    /// Projective action on the boundary circle R ∪ {∞}. Total: poles go to ∞.
    pub fn apply_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        BoundaryPoint::from_projective(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    pub fn classify(&self, tol: f64) -> Kind {
        if self.approx_eq(&MoebiusMap::IDENTITY, tol) {
            return Kind::Identity;
        }
        let t = self.trace().abs();
        if t > 2.0 + tol {
            Kind::Hyperbolic
        } else if (t - 2.0).abs() <= tol {
            Kind::Parabolic
        } else {
            Kind::Elliptic
        }
    }

    /// Fixed points of a hyperbolic map, attracting first.
    ///
    /// The attracting point q has |cq + d| > 1 (derivative magnitude below one);
    /// with c ~ 0 one fixed point is ∞, assigned by comparing |a| against |d|.
    pub fn fixed_points(&self, tol: f64) -> Result<(BoundaryPoint, BoundaryPoint)> {
        let kind = self.classify(tol);
        if kind != Kind::Hyperbolic {
            return Err(Error::NotHyperbolic { kind });
        }
        if self.c.abs() <= tol {
            let finite = BoundaryPoint::finite(self.b / (self.d - self.a));
            let inf = BoundaryPoint::INFINITY;
            return Ok(if self.a.abs() > self.d.abs() { (inf, finite) } else { (finite, inf) });
        }
        // fixed points solve c z^2 + (d - a) z - b = 0; with det 1 the
        // discriminant is tr^2 - 4. Stable quadratic: avoid cancellation.
        let tr = self.trace();
        let disc = (tr * tr - 4.0).sqrt();
        let bb = self.d - self.a;
        let q = -0.5 * (bb + bb.signum() * disc);
        let (r1, r2) = (q / self.c, -self.b / q);
        // attracting root z has |c z + d| = (|tr| + disc) / 2 > 1
        let deriv = |z: f64| (self.c * z + self.d).abs();
        Ok(if deriv(r1) > deriv(r2) {
            (BoundaryPoint::finite(r1), BoundaryPoint::finite(r2))
        } else {
            (BoundaryPoint::finite(r2), BoundaryPoint::finite(r1))
        })
    }

    /// Hyperbolic translation length 2·arccosh(|tr|/2).
    pub fn translation_length(&self, tol: f64) -> Result<f64> {
        let kind = self.classify(tol);
        if kind != Kind::Hyperbolic {
            return Err(Error::NotHyperbolic { kind });
        }
        Ok(2.0 * (self.trace().abs() / 2.0).acosh())
    }
}

fn mul(
    (sa, sb, sc, sd): (f64, f64, f64, f64),
    (ta, tb, tc, td): (f64, f64, f64, f64),
) -> (f64, f64, f64, f64) {
    (
        sa * ta + sb * tc,
        sa * tb + sb * td,
        sc * ta + sd * tc,
        sc * tb + sd * td,
    )
}

/// Commutator S T S⁻¹ T⁻¹ together with its well-defined signed trace.
///
/// Each factor appears alongside its inverse, so the product of raw
/// representatives is independent of the sign choices; the canonical form
/// alone would lose that sign.
pub fn commutator(s: &MoebiusMap, t: &MoebiusMap) -> (MoebiusMap, f64) {
    let s_raw = (s.a, s.b, s.c, s.d);
    let t_raw = (t.a, t.b, t.c, t.d);
    let s_adj = (s.d, -s.b, -s.c, s.a);
    let t_adj = (t.d, -t.b, -t.c, t.a);
    let p = mul(mul(mul(s_raw, t_raw), s_adj), t_adj);
    let signed_trace = p.0 + p.3;
    let det = p.0 * p.3 - p.1 * p.2;
    let k = if det > 0.25 && det < 4.0 { det.sqrt().recip() } else { 1.0 };
    let map = MoebiusMap { a: p.0 * k, b: p.1 * k, c: p.2 * k, d: p.3 * k }
        .canonical(DEFAULT_TOL);
    (map, signed_trace * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TOL;

    // independent 2x2 oracle used for the derived products
    fn mat_mul(x: [f64; 4], y: [f64; 4]) -> [f64; 4] {
        [
            x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3],
        ]
    }

    #[test]
    fn normalize_scalar_multiple_of_identity() {
        let m = MoebiusMap::normalize(2.0, 0.0, 0.0, 2.0, TOL).unwrap();
        assert!(m.approx_eq(&MoebiusMap::IDENTITY, TOL));
    }

    #[test]
    fn normalize_rescales_by_sqrt_det() {
        let m = MoebiusMap::normalize(4.0, 0.0, 0.0, 1.0, TOL).unwrap();
        assert!(m.approx_eq(&MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 }, TOL));
    }

    #[test]
    fn normalize_rejects_negative_det() {
        assert!(matches!(
            MoebiusMap::normalize(1.0, 1.0, 0.0, -1.0, TOL),
            Err(Error::NonOrientable { .. })
        ));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let t = MoebiusMap::normalize(5.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0, 5.0 / 3.0, TOL).unwrap();
        assert!(MoebiusMap::IDENTITY.compose(&t).approx_eq(&t, TOL));
        assert!(t.compose(&t.inverse()).approx_eq(&MoebiusMap::IDENTITY, TOL));
    }

    #[test]
    fn compose_matches_independent_product() {
        // oracle: plain 2x2 multiplication of the inputs
        let x = [2.0, 0.0, 0.0, 0.5];
        let y = [5.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0, 5.0 / 3.0];
        let expect = mat_mul(x, y);
        assert_eq!(expect, [10.0 / 3.0, 8.0 / 3.0, 2.0 / 3.0, 5.0 / 6.0]);
        let s = MoebiusMap::normalize(x[0], x[1], x[2], x[3], TOL).unwrap();
        let t = MoebiusMap::normalize(y[0], y[1], y[2], y[3], TOL).unwrap();
        let got = s.compose(&t);
        let want = MoebiusMap { a: expect[0], b: expect[1], c: expect[2], d: expect[3] };
        assert!(got.approx_eq(&want, 1e-12));
    }

    #[test]
    fn inverse_of_shear() {
        let t = MoebiusMap { a: 1.0, b: 1.0, c: 0.0, d: 1.0 };
        assert!(t.inverse().approx_eq(&MoebiusMap { a: 1.0, b: -1.0, c: 0.0, d: 1.0 }, TOL));
        let diag = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        assert!(diag.inverse().approx_eq(&MoebiusMap { a: 0.5, b: 0.0, c: 0.0, d: 2.0 }, TOL));
    }

    #[test]
    fn boundary_action() {
        let t = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        assert!(t.apply_boundary(BoundaryPoint::INFINITY).is_infinite(TOL));
        let p = t.apply_boundary(BoundaryPoint::finite(1.0));
        assert!((p.to_real().unwrap() - 4.0).abs() <= TOL);
        let rot = MoebiusMap { a: 0.0, b: -1.0, c: 1.0, d: 0.0 };
        assert!(rot.apply_boundary(BoundaryPoint::finite(0.0)).is_infinite(TOL));
    }

    #[test]
    fn classify_by_trace() {
        let hyp = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        assert_eq!(hyp.classify(TOL), Kind::Hyperbolic);
        let par = MoebiusMap { a: 1.0, b: 1.0, c: 0.0, d: 1.0 };
        assert_eq!(par.classify(TOL), Kind::Parabolic);
        let (s, c) = (std::f64::consts::FRAC_PI_4.sin(), std::f64::consts::FRAC_PI_4.cos());
        let ell = MoebiusMap { a: c, b: -s, c: s, d: c };
        assert_eq!(ell.classify(TOL), Kind::Elliptic);
        assert_eq!(MoebiusMap::IDENTITY.classify(TOL), Kind::Identity);
    }

    #[test]
    fn fixed_points_of_dilation() {
        let t = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        let (att, rep) = t.fixed_points(TOL).unwrap();
        assert!(att.is_infinite(TOL));
        assert!(rep.to_real().unwrap().abs() <= TOL);
    }

    #[test]
    fn fixed_points_solve_quadratic() {
        // oracle: c z^2 + (d-a) z - b = 0 with c=4/3, d-a=0, b=4/3 gives z = ±1;
        // derivative |cz+d| at +1 is 3 > 1, so +1 attracts.
        let t = MoebiusMap { a: 5.0 / 3.0, b: 4.0 / 3.0, c: 4.0 / 3.0, d: 5.0 / 3.0 };
        let (att, rep) = t.fixed_points(TOL).unwrap();
        assert!((att.to_real().unwrap() - 1.0).abs() <= 1e-12);
        assert!((rep.to_real().unwrap() + 1.0).abs() <= 1e-12);
    }

    #[test]
    fn fixed_points_conjugated_dilation() {
        // oracle: 4.95 z^2 + 19.8 z + 14.85 = 0, i.e. z^2 + 4z + 3 = 0, roots -1, -3;
        // |c z + d| at -1 is 10, at -3 is 0.1.
        let t = MoebiusMap { a: -4.85, b: -14.85, c: 4.95, d: 14.95 };
        let (att, rep) = t.fixed_points(TOL).unwrap();
        assert!((att.to_real().unwrap() + 1.0).abs() <= 1e-9);
        assert!((rep.to_real().unwrap() + 3.0).abs() <= 1e-9);
    }

    #[test]
    fn translation_lengths() {
        let t = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        assert!((t.translation_length(TOL).unwrap() - 2.0 * 2.0f64.ln()).abs() <= 1e-12);
        // arccosh(5/3) = ln 3
        let u = MoebiusMap { a: 5.0 / 3.0, b: 4.0 / 3.0, c: 4.0 / 3.0, d: 5.0 / 3.0 };
        assert!((u.translation_length(TOL).unwrap() - 2.0 * 3.0f64.ln()).abs() <= 1e-12);
        let par = MoebiusMap { a: 1.0, b: 1.0, c: 0.0, d: 1.0 };
        assert!(matches!(par.translation_length(TOL), Err(Error::NotHyperbolic { .. })));
    }

    #[test]
    fn commutator_signed_trace_ignores_representative_signs() {
        let s = MoebiusMap { a: 2.0, b: 0.0, c: 0.0, d: 0.5 };
        let t = {
            let (sh, ch) = (1.2f64.sinh(), 1.2f64.cosh());
            MoebiusMap { a: ch, b: sh, c: sh, d: ch }
        };
        let (_, tr) = commutator(&s, &t);
        // oracle: raw product over all four sign choices
        let raw = |m: &MoebiusMap, flip: bool| -> [f64; 4] {
            let s = if flip { -1.0 } else { 1.0 };
            [s * m.a, s * m.b, s * m.c, s * m.d]
        };
        let adj = |m: [f64; 4]| [m[3], -m[1], -m[2], m[0]];
        for fs in [false, true] {
            for ft in [false, true] {
                let sm = raw(&s, fs);
                let tm = raw(&t, ft);
                let p = mat_mul(mat_mul(mat_mul(sm, tm), adj(sm)), adj(tm));
                assert!((p[0] + p[3] - tr).abs() <= 1e-9, "sign choice changed the trace");
            }
        }
        // closed form for these normal forms: 2 - sinh^2(t) (λ - 1/λ)^2
        let expect = 2.0 - 1.2f64.sinh().powi(2) * 2.25;
        assert!((tr - expect).abs() <= 1e-9);
    }
}
