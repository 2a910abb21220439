//! Marked Schottky systems: generators with paired circles, the classical
//! ping-pong verifier, word evaluation, limit-set sampling, and the
//! quotient-surface bookkeeping.

use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result, Violation};
use crate::geometry::{image_circle, CircleOnAxis};
use crate::moebius::{Kind, MoebiusMap};
use crate::word::Word;

/// Marked generators A_1..A_g with their circle pairs (C_i, C'_i).
/// A certified system additionally passes [`verify_classical`].
#[derive(Debug, Clone)]
pub struct SchottkySystem {
    generators: Vec<MoebiusMap>,
    pairs: Vec<(CircleOnAxis, CircleOnAxis)>,
}

/// Witness data of a passing ping-pong check: the smallest gap between the
/// circle intervals, and the worst foot mismatch of A_i(C_i) against C'_i.
/// A valid certificate has positive margin and residual at most tol.
#[derive(Debug, Clone, Copy)]
pub struct Certificate {
    pub margin: f64,
    pub pairing_residual: f64,
}

impl SchottkySystem {
    pub fn new(
        generators: Vec<MoebiusMap>,
        pairs: Vec<(CircleOnAxis, CircleOnAxis)>,
    ) -> Result<SchottkySystem> {
        if generators.is_empty() {
            return Err(Error::EmptySystem);
        }
        if generators.len() != pairs.len() {
            return Err(Error::LengthMismatch {
                generators: generators.len(),
                circles: 2 * pairs.len(),
            });
        }
        Ok(SchottkySystem { generators, pairs })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[MoebiusMap] {
        &self.generators
    }

    pub fn pairs(&self) -> &[(CircleOnAxis, CircleOnAxis)] {
        &self.pairs
    }

    /// All 2g circles, flat: index 2i is C_i, index 2i+1 is C'_i.
    pub fn circles(&self) -> Vec<CircleOnAxis> {
        self.pairs.iter().flat_map(|&(c, c1)| [c, c1]).collect()
    }

    /// Conjugated system F · sys · F⁻¹ with circles moved by F.
    pub fn conjugate(&self, frame: &MoebiusMap, tol: f64) -> Result<SchottkySystem> {
        let inv = frame.inverse();
        let generators = self
            .generators
            .iter()
            .map(|g| frame.compose(g).compose(&inv))
            .collect();
        let pairs = self
            .pairs
            .iter()
            .map(|(c, c1)| Ok((image_circle(frame, c, tol)?, image_circle(frame, c1, tol)?)))
            .collect::<Result<Vec<_>>>()?;
        SchottkySystem::new(generators, pairs)
    }
}

/// Checks the circle ping-pong definition: all 2g circle intervals pairwise
/// disjoint, each generator sends ∞ (exterior of C_i) strictly inside C'_i,
/// and maps C_i onto C'_i within tol. A pass certifies the marked group
/// free of rank g, discrete, and purely hyperbolic.
pub fn verify_classical(
    sys: &SchottkySystem,
    tol: f64,
) -> std::result::Result<Certificate, Violation> {
    for (i, g) in sys.generators.iter().enumerate() {
        let kind = g.classify(tol);
        if kind != Kind::Hyperbolic {
            return Err(Violation::NonHyperbolicGenerator { index: i, kind });
        }
    }

    // (1) the 2g closed intervals are pairwise disjoint with positive gap
    let circles = sys.circles();
    let mut order: Vec<usize> = (0..circles.len()).collect();
    order.sort_by(|&i, &j| circles[i].left_foot().total_cmp(&circles[j].left_foot()));
    let mut margin = f64::INFINITY;
    for w in order.windows(2) {
        let gap = circles[w[1]].left_foot() - circles[w[0]].right_foot();
        if gap <= tol {
            return Err(Violation::Overlap { first: w[0], second: w[1], gap });
        }
        margin = margin.min(gap);
    }

    // (2) exterior goes to interior: the image of ∞ lands inside C'_i
    for (i, (g, (_, target))) in sys.generators.iter().zip(&sys.pairs).enumerate() {
        match g.apply_boundary(BoundaryPoint::INFINITY).to_real_tol(tol) {
            Some(w) if target.contains(w) => {}
            _ => return Err(Violation::WrongDirection { index: i }),
        }
    }

    // (3) each generator carries its circle onto its partner
    let mut residual = 0.0f64;
    for (i, (g, (source, target))) in sys.generators.iter().zip(&sys.pairs).enumerate() {
        let image = match image_circle(g, source, tol) {
            Ok(c) => c,
            Err(_) => return Err(Violation::PairingMismatch { index: i, residual: f64::INFINITY }),
        };
        let r = image.foot_residual(target);
        if r > tol {
            return Err(Violation::PairingMismatch { index: i, residual: r });
        }
        residual = residual.max(r);
    }

    Ok(Certificate { margin, pairing_residual: residual })
}

/// Product of the marked generators along a reduced word; the empty word is
/// the identity.
pub fn evaluate_word(generators: &[MoebiusMap], word: &Word) -> Result<MoebiusMap> {
    let mut acc = MoebiusMap::IDENTITY;
    for &letter in word.letters() {
        let idx = letter.unsigned_abs() as usize;
        if idx == 0 || idx > generators.len() {
            return Err(Error::BadIndex { letter, rank: generators.len() });
        }
        let g = &generators[idx - 1];
        let factor = if letter > 0 { *g } else { g.inverse() };
        acc = acc.compose(&factor);
    }
    Ok(acc)
}

/// One nested circle of the limit-set tree: the word, the circle, and its
/// center as the boundary sample point.
#[derive(Debug, Clone)]
pub struct LimitSample {
    pub word: Word,
    pub point: BoundaryPoint,
    pub circle: CircleOnAxis,
}

/// Nested word circles for every reduced word of length 1..=depth, in
/// lexicographic word order. The circle of `w = s_1..s_k` is the image under
/// `s_1..s_{k-1}` of the target circle of the final letter (C'_i for +i,
/// C_i for −i), so each circle nests strictly inside its parent's.
pub fn limit_set_sample(
    sys: &SchottkySystem,
    depth: usize,
    tol: f64,
) -> Result<Vec<LimitSample>> {
    verify_classical(sys, tol).map_err(Error::NotCertified)?;
    let g = sys.rank() as i32;
    let mut letters: Vec<i32> = (1..=g).flat_map(|i| [-i, i]).collect();
    letters.sort_unstable();

    let target = |letter: i32| {
        let (c, c1) = sys.pairs[(letter.unsigned_abs() - 1) as usize];
        if letter > 0 {
            c1
        } else {
            c
        }
    };

    let mut out = Vec::new();
    // stack of (word, prefix transform = product of all but the last letter)
    let mut stack: Vec<(Word, MoebiusMap)> = letters
        .iter()
        .rev()
        .map(|&l| (Word::new(vec![l]).expect("single letter"), MoebiusMap::IDENTITY))
        .collect();
    while let Some((word, prefix)) = stack.pop() {
        let last = *word.letters().last().expect("nonempty");
        let circle = image_circle(&prefix, &target(last), tol)?;
        out.push(LimitSample {
            word: word.clone(),
            point: BoundaryPoint::finite(circle.center),
            circle,
        });
        if word.len() < depth {
            let gen = if last > 0 {
                sys.generators[(last - 1) as usize]
            } else {
                sys.generators[(-last - 1) as usize].inverse()
            };
            let next_prefix = prefix.compose(&gen);
            for &l in letters.iter().rev() {
                if l != -last {
                    stack.push((word.push(l).expect("reduced"), next_prefix));
                }
            }
        }
    }
    out.sort_by(|s, t| s.word.cmp(&t.word));
    Ok(out)
}

/// Free rank of the fundamental group of a genus-n surface with h holes.
pub fn rank_genus_relation(n: u32, h: u32) -> Result<u32> {
    if h == 0 || (n == 0 && h == 1) {
        return Err(Error::InvalidSurface { n, h });
    }
    Ok(2 * n + h - 1)
}

/// Genus and hole count of the quotient surface of a certified system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceShape {
    pub rank: usize,
    pub holes: usize,
    pub genus: usize,
}

/// Counts the boundary circles of the quotient surface by following the
/// complementary arcs of R through the side pairings.
///
/// The 2g circle intervals cut R ∪ {∞} into 2g open arcs. Each arc end sits
/// at a circle foot; the pairing map of that circle glues it to an end of
/// another arc. Boundary components of the quotient correspond to cycles of
/// the induced walk; each component is traced once in each direction, so the
/// number of holes is half the cycle count. The walk is defined on arc ends,
/// not arcs, since the two ends of one arc may be glued to different images.
pub fn count_quotient_boundaries(sys: &SchottkySystem, tol: f64) -> Result<SurfaceShape> {
    verify_classical(sys, tol).map_err(Error::NotCertified)?;
    let circles = sys.circles();
    let n = circles.len(); // 2g

    // feet are numbered 2k (left) and 2k+1 (right) for circle k
    let foot_pos = |f: usize| {
        let c = &circles[f / 2];
        if f % 2 == 0 {
            c.left_foot()
        } else {
            c.right_foot()
        }
    };

    // sorted interval order; arc j runs from the right foot of the j-th
    // interval to the left foot of the (j+1)-th, cyclically (the last arc
    // passes through ∞)
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| circles[i].left_foot().total_cmp(&circles[j].left_foot()));
    let mut arc_of_foot = vec![(0usize, 0usize); 2 * n]; // foot -> (arc, other foot)
    for (pos, &ci) in order.iter().enumerate() {
        let next = order[(pos + 1) % n];
        let right = 2 * ci + 1;
        let left_of_next = 2 * next;
        arc_of_foot[right] = (pos, left_of_next);
        arc_of_foot[left_of_next] = (pos, right);
    }

    // glue: the generator of circle 2i sends its feet to the feet of circle
    // 2i+1; match images by distance and require a bijection
    let mut glue = vec![usize::MAX; 2 * n];
    for (i, g) in sys.generators.iter().enumerate() {
        let (src, dst) = (2 * i, 2 * i + 1);
        let mut taken = [false; 2];
        for side in 0..2 {
            let image = g.apply_boundary(BoundaryPoint::finite(foot_pos(2 * src + side)));
            let mut best = (f64::INFINITY, 0usize);
            for t in 0..2 {
                let d = image.chordal(&BoundaryPoint::finite(foot_pos(2 * dst + t)));
                if d < best.0 {
                    best = (d, t);
                }
            }
            if taken[best.1] {
                return Err(Error::ParityError { rank: sys.rank(), holes: 0 });
            }
            taken[best.1] = true;
            glue[2 * src + side] = 2 * dst + best.1;
            glue[2 * dst + best.1] = 2 * src + side;
        }
    }

    // walk: glue the foot, then cross to the other end of the arc there
    let mut seen = vec![false; 2 * n];
    let mut cycles = 0usize;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut f = start;
        while !seen[f] {
            seen[f] = true;
            f = arc_of_foot[glue[f]].1;
        }
    }

    let rank = sys.rank();
    if cycles % 2 != 0 {
        return Err(Error::ParityError { rank, holes: cycles });
    }
    let holes = cycles / 2;
    if (rank + 1).checked_sub(holes).map_or(true, |d| d % 2 != 0) {
        return Err(Error::ParityError { rank, holes });
    }
    Ok(SurfaceShape { rank, holes, genus: (rank + 1 - holes) / 2 })
}
