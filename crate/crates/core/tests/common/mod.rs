//! Shared sampling helpers for the integration suites.

use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use schottky_core::{
    build_hyperbolic, isometric_circles, BoundaryPoint, MoebiusMap, SchottkySystem, DEFAULT_TOL,
};

pub const TOL: f64 = DEFAULT_TOL;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random isometry as rotation · dilation · translation.
pub fn random_moebius(rng: &mut ChaCha8Rng) -> MoebiusMap {
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
    let s: f64 = rng.gen_range(-1.0..1.0);
    let tau: f64 = rng.gen_range(-2.0..2.0);
    let rot = MoebiusMap { a: theta.cos(), b: -theta.sin(), c: theta.sin(), d: theta.cos() };
    let dil = MoebiusMap { a: s.exp(), b: 0.0, c: 0.0, d: (-s).exp() };
    let tra = MoebiusMap { a: 1.0, b: tau, c: 0.0, d: 1.0 };
    rot.compose(&dil).compose(&tra)
}

/// Random hyperbolic element with well-separated fixed points.
pub fn random_hyperbolic(rng: &mut ChaCha8Rng) -> MoebiusMap {
    loop {
        let p: f64 = rng.gen_range(-5.0..5.0);
        let q: f64 = rng.gen_range(-5.0..5.0);
        if (p - q).abs() < 0.2 {
            continue;
        }
        let t: f64 = rng.gen_range(0.5..6.0);
        return build_hyperbolic(BoundaryPoint::finite(p), BoundaryPoint::finite(q), t, TOL)
            .unwrap();
    }
}

/// The certified pair with axes (−3, −1) and (3, 1).
pub fn standard_pair(length: f64) -> (MoebiusMap, MoebiusMap) {
    let p = BoundaryPoint::finite;
    (
        build_hyperbolic(p(-3.0), p(-1.0), length, TOL).unwrap(),
        build_hyperbolic(p(3.0), p(1.0), length, TOL).unwrap(),
    )
}

pub fn standard_pair_system(length: f64) -> SchottkySystem {
    let (a, b) = standard_pair(length);
    SchottkySystem::new(
        vec![a, b],
        vec![isometric_circles(&a, TOL).unwrap(), isometric_circles(&b, TOL).unwrap()],
    )
    .unwrap()
}
