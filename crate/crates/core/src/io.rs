//! JSON file formats and the limit-set CSV export.
//!
//! Matrices are accepted un-normalized and stored normalized. A group file
//! carries the tolerance it was written with; circles are flat, with
//! entries 2i and 2i+1 forming the pair (C_i, C'_i) of generator i.

use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result};
use crate::geometry::CircleOnAxis;
use crate::moebius::MoebiusMap;
use crate::nielsen::NielsenPath;
use crate::system::{LimitSample, SchottkySystem};
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub tol: f64,
    pub generators: Vec<MoebiusMap>,
    pub circles: Vec<CircleOnAxis>,
}

impl GroupFile {
    pub fn from_system(sys: &SchottkySystem, tol: f64) -> GroupFile {
        GroupFile {
            tol,
            generators: sys.generators().to_vec(),
            circles: sys.circles(),
        }
    }

    pub fn to_system(&self) -> Result<SchottkySystem> {
        let tol = self.tolerance();
        let generators = self
            .generators
            .iter()
            .map(|m| MoebiusMap::normalize(m.a, m.b, m.c, m.d, tol))
            .collect::<Result<Vec<_>>>()?;
        if self.circles.len() != 2 * generators.len() {
            return Err(Error::LengthMismatch {
                generators: generators.len(),
                circles: self.circles.len(),
            });
        }
        for c in &self.circles {
            if !(c.radius > tol) {
                return Err(Error::InvalidParameter("circle radius must be positive"));
            }
        }
        let pairs = self.circles.chunks(2).map(|w| (w[0], w[1])).collect();
        SchottkySystem::new(generators, pairs)
    }

    pub fn tolerance(&self) -> f64 {
        if self.tol > 0.0 {
            self.tol
        } else {
            DEFAULT_TOL
        }
    }
}

/// Output of the non-classical example: the marked pair plus the certified
/// witness system proving the group itself is Schottky.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairFile {
    pub tol: f64,
    pub pair: Vec<MoebiusMap>,
    pub witness: GroupFile,
}

/// Output of the classicalization search: the certified system together
/// with the move path from the input tuple and the number of tuples tried.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassicalFile {
    pub tol: f64,
    pub generators: Vec<MoebiusMap>,
    pub circles: Vec<CircleOnAxis>,
    pub nielsen_path: NielsenPath,
    pub visited: usize,
}

/// Boundary point as JSON: a number, or the string `"inf"`.
pub fn boundary_point_to_json(p: &BoundaryPoint, tol: f64) -> serde_json::Value {
    match p.to_real_tol(tol) {
        Some(t) => serde_json::json!(t),
        None => serde_json::json!("inf"),
    }
}

pub fn boundary_point_from_json(v: &serde_json::Value) -> Result<BoundaryPoint> {
    if let Some(t) = v.as_f64() {
        return Ok(BoundaryPoint::finite(t));
    }
    if v.as_str() == Some("inf") {
        return Ok(BoundaryPoint::INFINITY);
    }
    Err(Error::InvalidParameter("boundary point must be a number or \"inf\""))
}

/// CSV export of limit-set samples: `word,point,center,radius`, one row per
/// sample in the sampler's lexicographic order.
pub fn limit_set_csv(samples: &[LimitSample]) -> String {
    let mut out = String::from("word,point,center,radius\n");
    for s in samples {
        let point = s.point.to_real().map(|t| t.to_string()).unwrap_or_else(|| "inf".into());
        out.push_str(&format!("{},{},{},{}\n", s.word, point, s.circle.center, s.circle.radius));
    }
    out
}
