//! Surface complexes: a 1-complex plus faces, each face stored once by a
//! closed boundary word over the segments (segment `i` is generator `i`).
//! The inverse face is implied by the inverse word.

mod classify;
mod dual;
mod extend;
mod format;
mod group;

pub use classify::{classify, normal_form_complex, standard_word, Classification, Move, NormalForm, TraceStep};
pub use dual::{dual_complex, dual_of};
pub use extend::Extension;
pub use format::{polygon_complex, SurfaceNames};
pub use group::{fundamental_group, fundamental_group_with_tree, homology_class, intersection_number};

use thiserror::Error;

use crate::complexes::{Dart, Graph1, GraphError};
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("face {0} has an empty boundary")]
    EmptyFace(usize),
    #[error("boundary of face {face} is not a closed path (breaks at step {step})")]
    OpenBoundary { face: usize, step: usize },
    #[error("A.4: the complex is not connected")]
    Disconnected,
    #[error("A.5: segment {0} lies on no face boundary")]
    UnusedSegment(usize),
    #[error("A.6: segment {segment} is run through {count} times, expected exactly 2")]
    Incidence { segment: usize, count: usize },
    #[error("A.7: the star at point {point} does not close over all {darts} segments")]
    Star { point: usize, darts: usize },
    #[error("`{0}` is not a closed path")]
    NotClosed(String),
    #[error("expected a complex with a single face")]
    NotSingleFace,
    #[error("segment {segment} occurs {count} times, expected 2")]
    Occurrences { segment: usize, count: usize },
    #[error("homology vectors of lengths {0} and {1} do not pair")]
    LengthMismatch(usize, usize),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("move does not apply: {0}")]
    BadMove(String),
    #[error("classification stalled at {0}")]
    Stalled(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComplex {
    graph: Graph1,
    faces: Vec<Word>,
}

impl SurfaceComplex {
    pub fn new(graph: Graph1, faces: Vec<Word>) -> Result<Self, SurfaceError> {
        for (f, w) in faces.iter().enumerate() {
            if w.is_empty() {
                return Err(SurfaceError::EmptyFace(f));
            }
            let start = graph.tail(Dart::from_letter(w[0]));
            let path = graph.path_from_word(start, w).map_err(|e| match e {
                GraphError::BrokenPath(step) => SurfaceError::OpenBoundary { face: f, step },
                e => e.into(),
            })?;
            if !path.is_closed(&graph) {
                return Err(SurfaceError::OpenBoundary { face: f, step: w.len() });
            }
        }
        Ok(SurfaceComplex { graph, faces })
    }

    /// One point, one face: every segment is a loop.
    pub fn polygon(n_segments: usize, word: Word) -> Result<Self, SurfaceError> {
        let graph = Graph1::new(1, vec![(0, 0); n_segments])?;
        SurfaceComplex::new(graph, vec![word])
    }

    pub fn graph(&self) -> &Graph1 {
        &self.graph
    }

    pub fn faces(&self) -> &[Word] {
        &self.faces
    }

    pub fn n_points(&self) -> usize {
        self.graph.n_points()
    }

    pub fn n_segments(&self) -> usize {
        self.graph.n_segments()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// `(face, position)` of every occurrence of each segment.
    pub fn occurrences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut occ = vec![Vec::new(); self.n_segments()];
        for (f, w) in self.faces.iter().enumerate() {
            for (i, l) in w.iter().enumerate() {
                occ[l.generator()].push((f, i));
            }
        }
        occ
    }

    fn letter_at(&self, (f, i): (usize, usize)) -> Letter {
        self.faces[f][i]
    }
}

/// `c = -a_0 + a_1 - a_2`.
pub fn characteristic(c: &SurfaceComplex) -> i64 {
    -(c.n_points() as i64) + c.n_segments() as i64 - c.n_faces() as i64
}

/// A corner of face `f` sits at position `i`, between `w[i-1]` and `w[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub face: usize,
    pub pos: usize,
}

/// Evidence that a complex is a closed manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldCert {
    /// The two occurrences of every segment, in `(face, position)` order.
    pub incidence: Vec<[(usize, usize); 2]>,
    /// Darts leaving each point, in star order.
    pub stars: Vec<Vec<Dart>>,
    /// Corners around each point; the walk leaves `corners[p][i]` along
    /// `stars[p][i]`.
    pub corners: Vec<Vec<Corner>>,
}

/// One step of the walk around a point: leave corner `from` through the
/// boundary letter at its own position and arrive at the next corner.
/// Returns the arrival corner, the exit occurrence and the entry occurrence.
pub(crate) fn star_step(
    c: &SurfaceComplex,
    incidence: &[[(usize, usize); 2]],
    from: Corner,
    exit_via_next: bool,
) -> (Corner, (usize, usize), (usize, usize), bool) {
    let len = |f: usize| c.faces[f].len();
    // side A is the occurrence at `pos` (dart w[pos]); side B the one at
    // `pos - 1` (dart w[pos-1]⁻¹)
    let exit = if exit_via_next {
        (from.face, from.pos)
    } else {
        (from.face, (from.pos + len(from.face) - 1) % len(from.face))
    };
    let l = c.letter_at(exit);
    let dart = if exit_via_next { l } else { l.inverse() };
    let s = l.generator();
    let entry = if incidence[s][0] == exit { incidence[s][1] } else { incidence[s][0] };
    let l2 = c.letter_at(entry);
    if l2 == dart {
        // arrive through side A, leave next time through side B
        (Corner { face: entry.0, pos: entry.1 }, exit, entry, false)
    } else {
        let pos = (entry.1 + 1) % len(entry.0);
        (Corner { face: entry.0, pos }, exit, entry, true)
    }
}

/// Checks A.4 to A.7 in order.
pub fn validate_manifold(c: &SurfaceComplex) -> Result<ManifoldCert, SurfaceError> {
    if c.n_points() == 0 || !c.graph.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    let occ = c.occurrences();
    if let Some(s) = occ.iter().position(|o| o.is_empty()) {
        return Err(SurfaceError::UnusedSegment(s));
    }
    if let Some(s) = occ.iter().position(|o| o.len() != 2) {
        return Err(SurfaceError::Incidence {
            segment: s,
            count: occ[s].len(),
        });
    }
    let incidence: Vec<[(usize, usize); 2]> = occ.iter().map(|o| [o[0], o[1]]).collect();
    let darts_at = c.graph.darts_at();
    let mut corners_at = vec![Vec::new(); c.n_points()];
    for (f, w) in c.faces.iter().enumerate() {
        for i in 0..w.len() {
            let p = c.graph.tail(Dart::from_letter(w[i]));
            corners_at[p].push(Corner { face: f, pos: i });
        }
    }
    let mut stars = Vec::with_capacity(c.n_points());
    let mut corners = Vec::with_capacity(c.n_points());
    for p in 0..c.n_points() {
        let total = darts_at[p].len();
        let Some(&first) = corners_at[p].first() else {
            return Err(SurfaceError::Star { point: p, darts: 0 });
        };
        let mut walk = vec![first];
        let mut star = Vec::new();
        let (mut at, mut via_next) = (first, true);
        loop {
            let (next, exit, _, nv) = star_step(c, &incidence, at, via_next);
            let l = c.letter_at(exit);
            star.push(Dart::from_letter(if via_next { l } else { l.inverse() }));
            if next == first && nv {
                break;
            }
            if walk.len() > total {
                return Err(SurfaceError::Star { point: p, darts: total });
            }
            walk.push(next);
            at = next;
            via_next = nv;
        }
        if walk.len() != total {
            return Err(SurfaceError::Star { point: p, darts: total });
        }
        stars.push(star);
        corners.push(walk);
    }
    Ok(ManifoldCert {
        incidence,
        stars,
        corners,
    })
}

/// Propagates face signs across shared segments; orientable iff every
/// segment is run through once in each direction.
pub fn orientable(c: &SurfaceComplex, cert: &ManifoldCert) -> bool {
    orientable_from(c, cert, 0)
}

pub(crate) fn orientable_from(c: &SurfaceComplex, cert: &ManifoldCert, seed: usize) -> bool {
    let n = c.n_faces();
    if n == 0 {
        return true;
    }
    let mut sign: Vec<Option<i64>> = vec![None; n];
    let mut by_face = vec![Vec::new(); n];
    for inc in &cert.incidence {
        by_face[inc[0].0].push(*inc);
        by_face[inc[1].0].push(*inc);
    }
    let mut stack = vec![seed];
    sign[seed] = Some(1);
    while let Some(f) = stack.pop() {
        for &[o1, o2] in &by_face[f] {
            let (e1, e2) = (c.letter_at(o1).sign(), c.letter_at(o2).sign());
            let (g1, g2) = (o1.0, o2.0);
            // need sign[g1] * e1 == -(sign[g2] * e2)
            for (known, unknown, ek, eu) in [(g1, g2, e1, e2), (g2, g1, e2, e1)] {
                if let Some(sk) = sign[known] {
                    let want = -sk * ek * eu;
                    match sign[unknown] {
                        None => {
                            sign[unknown] = Some(want);
                            stack.push(unknown);
                        }
                        Some(su) if su != want => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sidedness {
    OneSided,
    TwoSided,
}

/// In a one-face complex, `s` is one-sided iff both of its occurrences carry
/// the same sign.
pub fn segment_sidedness(c: &SurfaceComplex, s: usize) -> Result<Sidedness, SurfaceError> {
    if c.n_faces() != 1 {
        return Err(SurfaceError::NotSingleFace);
    }
    if s >= c.n_segments() {
        return Err(GraphError::NoSuchSegment(s).into());
    }
    let signs: Vec<bool> = c.faces[0].iter().filter(|l| l.generator() == s).map(|l| l.is_inverse()).collect();
    if signs.len() != 2 {
        return Err(SurfaceError::Occurrences {
            segment: s,
            count: signs.len(),
        });
    }
    Ok(if signs[0] == signs[1] {
        Sidedness::OneSided
    } else {
        Sidedness::TwoSided
    })
}
