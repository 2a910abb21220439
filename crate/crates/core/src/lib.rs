//! Computing with Fuchsian Schottky groups.
//!
//! The crate classifies real Möbius transformations, certifies marked
//! generating sets as classical Schottky systems by the circle ping-pong
//! definition, decides Schottky-ness and classicality for two-generator
//! groups, builds the standard classical groups for every quotient surface
//! type, and searches Nielsen-equivalent generating sets for one on which a
//! group is classical.
//!
//! All certificates are numerical: a pass carries explicit margins checked
//! at a configurable tolerance, and every verdict is re-checkable through
//! the independent verifier.

pub mod boundary;
pub mod construct;
pub mod error;
pub mod geometry;
pub mod io;
pub mod moebius;
pub mod nielsen;
pub mod pair;
pub mod system;
pub mod word;

/// Default comparison tolerance; every operation takes the tolerance
/// explicitly, this is the value callers normally pass.
pub const DEFAULT_TOL: f64 = 1e-9;

#[cfg(test)]
pub(crate) const TOL: f64 = DEFAULT_TOL;

pub use boundary::{
    arc_fraction, arc_midpoint, arc_point, cyclic_order, pairs_linked, point_in_arc, BoundaryPoint,
};
pub use construct::{nonclassical_pair_example, one_holed_torus_pair, standard_group, TranslationLength};
pub use error::{Error, Result, Violation};
pub use geometry::{axis, build_hyperbolic, geodesic_through, image_circle, isometric_circles, CircleOnAxis, Geodesic};
pub use moebius::{commutator, Kind, MoebiusMap};
pub use nielsen::{find_classical_generators, nielsen_neighbors, NielsenMove, NielsenPath, SearchOutcome};
pub use pair::{
    classical_circles_for_pair, disjoint_pair_classical_test, intersecting_pair_schottky_test,
    orient_pair_standard, pair_case, separation_certificate, ClassicalVerdict, OrientedPair,
    PairCase, SchottkyVerdict, SeparationCertificate,
};
pub use system::{
    count_quotient_boundaries, evaluate_word, limit_set_sample, rank_genus_relation,
    verify_classical, Certificate, LimitSample, SchottkySystem, SurfaceShape,
};
pub use word::Word;
