//! Explicit certified constructions: the standard classical group for every
//! quotient surface type, one-holed torus pairs, and a pair that is Schottky
//! but provably not classical on its marked generators.

use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result};
use crate::geometry::{build_hyperbolic, geodesic_through, isometric_circles, Geodesic};
use crate::moebius::MoebiusMap;
use crate::pair::intersecting_pair_schottky_test;
use crate::system::{verify_classical, SchottkySystem};

/// Translation length for the constructions: a fixed value, or start at
/// 2·ln 8 and double until the system certifies.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum TranslationLength {
    #[default]
    Auto,
    Fixed(f64),
}

const AUTO_START: f64 = 4.1588830833596715; // 2 ln 8
const AUTO_DOUBLINGS: u32 = 40;

/// Builds and certifies the standard classical group for a genus-n surface
/// with h holes (rank 2n + h − 1).
///
/// The 2n handle generators have concurrent axes through i, at evenly spread
/// directions that never include the vertical. The h − 1 hole generators
/// have axes nested inside the first gap between consecutive axis feet, at
/// geometrically shrinking subdivisions. All circles are isometric circles;
/// they shrink around the fixed axis feet as the length grows, so the auto
/// mode certifies after finitely many doublings.
pub fn standard_group(n: u32, h: u32, length: TranslationLength, tol: f64) -> Result<SchottkySystem> {
    if h == 0 || (n == 0 && h == 1) {
        return Err(Error::InvalidSurface { n, h });
    }

    let axes = standard_axes(n, h, tol)?;
    match length {
        TranslationLength::Fixed(t) => {
            let sys = system_from_axes(&axes, t, tol)?;
            verify_classical(&sys, tol).map_err(Error::NotCertified)?;
            Ok(sys)
        }
        TranslationLength::Auto => {
            let mut t = AUTO_START;
            for _ in 0..AUTO_DOUBLINGS {
                let sys = system_from_axes(&axes, t, tol)?;
                if verify_classical(&sys, tol).is_ok() {
                    return Ok(sys);
                }
                t *= 2.0;
            }
            Err(Error::AutoGrowthExhausted(AUTO_DOUBLINGS))
        }
    }
}

/// Axes of the standard group, independent of the translation length.
fn standard_axes(n: u32, h: u32, tol: f64) -> Result<Vec<Geodesic>> {
    use std::f64::consts::{FRAC_PI_4, PI};
    let mut axes = Vec::new();

    // 2n concurrent axes through i at tangent directions (2k+1)π/(4n);
    // in the foot parameter of geodesic_through this is π/4 + (2k+1)π/(8n),
    // which is never vertical and gives pairwise distinct crossing axes.
    for k in 0..2 * n {
        let phi = FRAC_PI_4 + (2 * k + 1) as f64 * PI / (8.0 * n as f64);
        axes.push(geodesic_through(phi, tol)?);
    }

    if h >= 2 {
        // nesting interval: the first gap between consecutive axis feet for
        // n ≥ 1 (endpoints of distinct neighbouring axes), a fixed default
        // interval when there are no handle axes
        let (lo, hi) = if n == 0 {
            (-1.0, 1.0)
        } else {
            let mut feet: Vec<f64> = axes
                .iter()
                .flat_map(|g| {
                    [
                        g.repelling.to_real().expect("finite axis feet"),
                        g.attracting.to_real().expect("finite axis feet"),
                    ]
                })
                .collect();
            feet.sort_by(f64::total_cmp);
            (feet[0], feet[1])
        };
        let span = hi - lo;
        for m in 1..h {
            let f = 3.0f64.powi(-(m as i32)); // 1/3, 1/9, ...
            let p = BoundaryPoint::finite(lo + f * span);
            let q = BoundaryPoint::finite(lo + (1.0 - f) * span);
            axes.push(Geodesic::new(p, q, tol)?);
        }
    }

    Ok(axes)
}

fn system_from_axes(axes: &[Geodesic], length: f64, tol: f64) -> Result<SchottkySystem> {
    let mut generators = Vec::with_capacity(axes.len());
    let mut pairs = Vec::with_capacity(axes.len());
    for g in axes {
        let m = build_hyperbolic(g.repelling, g.attracting, length, tol)?;
        pairs.push(isometric_circles(&m, tol)?);
        generators.push(m);
    }
    SchottkySystem::new(generators, pairs)
}

/// Intersecting-axes normal form A = diag(λ, 1/λ), B = [cosh t, sinh t;
/// sinh t, cosh t]; returned only when the commutator criterion certifies
/// the pair Schottky.
pub fn one_holed_torus_pair(lambda: f64, t: f64, tol: f64) -> Result<(MoebiusMap, MoebiusMap)> {
    if !(lambda > 1.0) {
        return Err(Error::InvalidParameter("multiplier must exceed 1"));
    }
    if !(t > 0.0) {
        return Err(Error::NonPositiveLength(t));
    }
    let a = MoebiusMap { a: lambda, b: 0.0, c: 0.0, d: lambda.recip() };
    let b = MoebiusMap { a: t.cosh(), b: t.sinh(), c: t.sinh(), d: t.cosh() };
    match intersecting_pair_schottky_test(&a, &b, tol)? {
        v if v.is_schottky() => Ok((a, b)),
        crate::pair::SchottkyVerdict::NotSchottky { commutator, .. } => {
            Err(Error::NotSchottky { commutator })
        }
        _ => unreachable!(),
    }
}

/// A generating pair that is Schottky but not classical: the certified
/// standard pair (A, B) with axes (−3, −1) and (3, 1) witnesses that the
/// group is Schottky, and the returned marking (A, AB) of the same group
/// fails the classicality criterion and carries a separation certificate.
///
/// Returns (A, AB, witness system). Default length 2·ln 10; shorter lengths
/// grow until the witness certifies.
pub fn nonclassical_pair_example(
    length: Option<f64>,
    tol: f64,
) -> Result<(MoebiusMap, MoebiusMap, SchottkySystem)> {
    let mut t = length.unwrap_or(2.0 * 10.0f64.ln());
    if !(t > 0.0) {
        return Err(Error::NonPositiveLength(t));
    }
    for _ in 0..AUTO_DOUBLINGS {
        let p = BoundaryPoint::finite;
        let a = build_hyperbolic(p(-3.0), p(-1.0), t, tol)?;
        let b = build_hyperbolic(p(3.0), p(1.0), t, tol)?;
        let witness = SchottkySystem::new(
            vec![a, b],
            vec![isometric_circles(&a, tol)?, isometric_circles(&b, tol)?],
        )?;
        if verify_classical(&witness, tol).is_ok() {
            let ab = a.compose(&b);
            return Ok((a, ab, witness));
        }
        t *= 2.0;
    }
    Err(Error::AutoGrowthExhausted(AUTO_DOUBLINGS))
}
