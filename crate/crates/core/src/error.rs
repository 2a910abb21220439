use thiserror::Error;

use crate::moebius::Kind;

/// Errors shared across the crate. Negative verdicts that carry geometric
/// content (e.g. a failed ping-pong check) live in [`Violation`] instead.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular or orientation-reversing (det = {det})")]
    NonOrientable { det: f64 },
    #[error("element is {kind:?}, expected hyperbolic")]
    NotHyperbolic { kind: Kind },
    #[error("boundary points coincide within tolerance")]
    SharedEndpoint,
    #[error("arc specification is degenerate (coinciding endpoints)")]
    DegenerateArc,
    #[error("geodesic endpoints coincide")]
    DegenerateAxis,
    #[error("translation length must be positive (got {0})")]
    NonPositiveLength(f64),
    #[error("map fixes infinity (|c| below tolerance); no isometric circles")]
    InfinityFixed,
    #[error("pole of the map lies on the circle; image is unbounded")]
    PoleOnCircle,
    #[error("a circle endpoint maps to infinity; image is a vertical line")]
    ImageThroughInfinity,
    #[error("vertical geodesics (through infinity) are not represented")]
    VerticalAxis,
    #[error("word is not reduced at position {0}")]
    NotReduced(usize),
    #[error("word letter {letter} out of range for {rank} generators")]
    BadIndex { letter: i32, rank: usize },
    #[error("system is not a certified classical configuration: {0}")]
    NotCertified(Violation),
    #[error("no surface of genus {n} with {h} holes (one-holed sphere excluded)")]
    InvalidSurface { n: u32, h: u32 },
    #[error("boundary-cycle bookkeeping inconsistent (rank {rank}, holes {holes})")]
    ParityError { rank: usize, holes: usize },
    #[error("operation requires the other axis configuration")]
    WrongCase,
    #[error("degenerate pair: {0}")]
    DegeneratePair(&'static str),
    #[error("test element is {kind:?}; pair is not Schottky on these generators")]
    TestElementNotHyperbolic { kind: Kind },
    #[error("pair fails the classicality criterion; no circles exist on these generators")]
    NotClassicalOnPair,
    #[error("circle construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("commutator is {commutator:?}; pair is not Schottky")]
    NotSchottky { commutator: Kind },
    #[error("auto length growth exhausted after {0} doublings")]
    AutoGrowthExhausted(u32),
    #[error("generator {0} is the identity")]
    IdentityGenerator(usize),
    #[error("generator {index} is {kind:?}, expected hyperbolic")]
    NonHyperbolicGenerator { index: usize, kind: Kind },
    #[error("system has no generators")]
    EmptySystem,
    #[error("{generators} generators but {circles} circles (need one pair per generator)")]
    LengthMismatch { generators: usize, circles: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Why a marked system failed the classical ping-pong check.
/// Indices refer to the generator whose pair is at fault.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Violation {
    #[error("generator {index} is {kind:?}, not hyperbolic")]
    NonHyperbolicGenerator { index: usize, kind: Kind },
    #[error("circle intervals {first} and {second} overlap (gap = {gap})")]
    Overlap { first: usize, second: usize, gap: f64 },
    #[error("generator {index} sends infinity outside its target circle")]
    WrongDirection { index: usize },
    #[error("generator {index} does not map its circle onto its partner (residual = {residual})")]
    PairingMismatch { index: usize, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
