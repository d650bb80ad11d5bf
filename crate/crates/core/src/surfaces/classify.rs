//! Reduction of a closed surface to its canonical normal form.
//!
//! Tree segments are contracted (never emptying a face), faces are fused
//! across shared segments, and the resulting one-point one-face word is
//! rewritten by cut-and-paste: first every same-direction pair becomes a
//! square, then every opposite pair joins a commutator, and finally each
//! square next to a commutator turns the pair into three squares.
//!
//! Each phase strictly increases the number of finished blocks (squares
//! plus commutators) or, in the last phase, lowers the number of
//! commutators, so the pipeline terminates.

use std::fmt;

use super::{characteristic, orientable, validate_manifold, SurfaceComplex, SurfaceError};
use crate::complexes::{Dart, Graph1};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Sphere,
    Orientable(usize),
    NonOrientable(usize),
}

impl NormalForm {
    /// `c = -a_0 + a_1 - a_2` of the normal form.
    pub fn characteristic(self) -> i64 {
        match self {
            NormalForm::Sphere => -2,
            NormalForm::Orientable(g) => 2 * g as i64 - 2,
            NormalForm::NonOrientable(g) => g as i64 - 2,
        }
    }

    pub fn is_orientable(self) -> bool {
        !matches!(self, NormalForm::NonOrientable(_))
    }

    pub fn genus(self) -> usize {
        match self {
            NormalForm::Sphere => 0,
            NormalForm::Orientable(g) | NormalForm::NonOrientable(g) => g,
        }
    }

    /// Recovers the form from orientability and characteristic.
    pub fn from_invariants(orientable: bool, c: i64) -> Option<Self> {
        match (orientable, c) {
            (true, -2) => Some(NormalForm::Sphere),
            (true, c) if c >= 0 && c % 2 == 0 => Some(NormalForm::Orientable((c as usize + 2) / 2)),
            (false, c) if c >= -1 => Some(NormalForm::NonOrientable((c + 2) as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Sphere => write!(f, "sphere"),
            NormalForm::Orientable(g) => write!(f, "orientable genus={}", g),
            NormalForm::NonOrientable(g) => write!(f, "non-orientable genus={}", g),
        }
    }
}

/// The complex realizing a normal form: `a A` on two points for the sphere,
/// otherwise one point and one face.
pub fn normal_form_complex(nf: NormalForm) -> SurfaceComplex {
    use crate::presentations::surface_relator;
    match nf {
        NormalForm::Sphere => {
            let g = Graph1::new(2, vec![(0, 1)]).expect("static graph");
            SurfaceComplex::new(g, vec![Word::from_ints(&[1, -1])]).expect("closed path")
        }
        NormalForm::Orientable(g) => {
            SurfaceComplex::polygon(2 * g, surface_relator(true, g)).expect("one-point complex")
        }
        NormalForm::NonOrientable(g) => {
            SurfaceComplex::polygon(g, surface_relator(false, g)).expect("one-point complex")
        }
    }
}

/// Elementary transformations recorded by [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Shrink a segment with distinct endpoints to a point.
    Contract { segment: usize },
    /// Delete a segment separating two different faces, fusing them.
    Merge { segment: usize },
    /// In a one-point complex, cut face `face` along a new segment from
    /// position `from` (`len` letters on one side) and glue the two pieces
    /// back along `glue`. The new segment takes over the index of `glue`.
    CutGlue {
        face: usize,
        from: usize,
        len: usize,
        glue: usize,
    },
    /// Reverse the direction of a segment.
    Reorient { segment: usize },
}

fn relabel_without(w: &Word, s: usize) -> Word {
    w.iter()
        .filter(|l| l.generator() != s)
        .map(|&l| {
            let g = l.generator();
            Letter::new(if g > s { g - 1 } else { g }, l.is_inverse())
        })
        .collect()
}

fn rotate_to(w: &[Letter], i: usize) -> Vec<Letter> {
    w[i..].iter().chain(&w[..i]).copied().collect()
}

fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

impl Move {
    pub fn apply(&self, c: &SurfaceComplex) -> Result<SurfaceComplex, SurfaceError> {
        let bad = |m: &str| SurfaceError::BadMove(m.to_string());
        match *self {
            Move::Contract { segment: s } => {
                if s >= c.n_segments() {
                    return Err(bad("no such segment"));
                }
                let (a, b) = c.graph().endpoints(s);
                if a == b {
                    return Err(bad("cannot contract a loop"));
                }
                let (keep, gone) = (a.min(b), a.max(b));
                let fix = |p: usize| {
                    let p = if p == gone { keep } else { p };
                    if p > gone {
                        p - 1
                    } else {
                        p
                    }
                };
                let segs = c
                    .graph()
                    .segments()
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != s)
                    .map(|(_, &(x, y))| (fix(x), fix(y)))
                    .collect();
                let faces: Vec<Word> = c.faces().iter().map(|w| relabel_without(w, s)).collect();
                if faces.iter().any(|w| w.is_empty()) {
                    return Err(bad("contraction would empty a face"));
                }
                SurfaceComplex::new(Graph1::new(c.n_points() - 1, segs)?, faces)
            }
            Move::Merge { segment: s } => {
                let occ = c.occurrences();
                let o = occ.get(s).ok_or_else(|| bad("no such segment"))?;
                if o.len() != 2 || o[0].0 == o[1].0 {
                    return Err(bad("segment does not separate two faces"));
                }
                let (f1, f2) = (o[0].0, o[1].0);
                let mut w1 = rotate_to(c.faces()[f1].letters(), o[0].1);
                if w1[0].is_inverse() {
                    w1 = rotate_to(&invert(&w1), w1.len() - 1);
                }
                let mut w2 = rotate_to(c.faces()[f2].letters(), o[1].1);
                if !w2[0].is_inverse() {
                    w2 = rotate_to(&invert(&w2), w2.len() - 1);
                }
                let merged: Word = w1[1..].iter().chain(&w2[1..]).copied().collect();
                if merged.is_empty() {
                    return Err(bad("merge would empty a face"));
                }
                let mut faces = Vec::with_capacity(c.n_faces() - 1);
                for (f, w) in c.faces().iter().enumerate() {
                    if f == f1 {
                        faces.push(relabel_without(&merged, s));
                    } else if f != f2 {
                        faces.push(relabel_without(w, s));
                    }
                }
                let segs = c
                    .graph()
                    .segments()
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != s)
                    .map(|(_, &e)| e)
                    .collect();
                SurfaceComplex::new(Graph1::new(c.n_points(), segs)?, faces)
            }
            Move::CutGlue { face, from, len, glue } => {
                if c.n_points() != 1 {
                    return Err(bad("cut-and-paste needs a one-point complex"));
                }
                let w = c.faces().get(face).ok_or_else(|| bad("no such face"))?;
                let n = w.len();
                if from >= n || len == 0 || len >= n {
                    return Err(bad("split out of range"));
                }
                let r = rotate_to(w.letters(), from);
                let (p, q) = r.split_at(len);
                let find = |part: &[Letter]| {
                    let hits: Vec<Letter> = part.iter().copied().filter(|l| l.generator() == glue).collect();
                    (hits.len() == 1).then(|| hits[0])
                };
                let (Some(lp), Some(lq)) = (find(p), find(q)) else {
                    return Err(bad("glue segment must occur once on each side"));
                };
                // the new segment is a fresh index until `glue` has gone
                let fresh = c.n_segments();
                let mut p1 = p.to_vec();
                p1.push(Letter::neg(fresh));
                let mut p2 = q.to_vec();
                p2.push(Letter::pos(fresh));
                if lp == lq {
                    p2 = invert(&p2);
                }
                let i = p1.iter().position(|&l| l == lp).expect("present");
                let x = rotate_to(&p1, i);
                let j = p2.iter().position(|&l| l == lp.inverse()).expect("present");
                let y = rotate_to(&p2, j);
                let glued: Word = x[1..]
                    .iter()
                    .chain(&y[1..])
                    .map(|&l| if l.generator() == fresh { Letter::new(glue, l.is_inverse()) } else { l })
                    .collect();
                let mut faces = c.faces().to_vec();
                faces[face] = glued;
                SurfaceComplex::new(c.graph().clone(), faces)
            }
            Move::Reorient { segment: s } => {
                if s >= c.n_segments() {
                    return Err(bad("no such segment"));
                }
                let segs = c
                    .graph()
                    .segments()
                    .iter()
                    .enumerate()
                    .map(|(t, &(x, y))| if t == s { (y, x) } else { (x, y) })
                    .collect();
                let faces = c
                    .faces()
                    .iter()
                    .map(|w| {
                        w.iter()
                            .map(|&l| if l.generator() == s { l.inverse() } else { l })
                            .collect()
                    })
                    .collect();
                SurfaceComplex::new(Graph1::new(c.n_points(), segs)?, faces)
            }
        }
    }
}

impl Move {
    /// Carries a closed segment path of `before` to the complex produced by
    /// this move. Removed segments are rewritten through the face that
    /// retires them.
    pub fn map_word(&self, before: &SurfaceComplex, w: &Word) -> Result<Word, SurfaceError> {
        let subst = |g: usize, image: Word| -> Word {
            let mut out = Vec::new();
            for &l in w {
                if l.generator() == g {
                    let piece = if l.is_inverse() { image.inverse() } else { image.clone() };
                    out.extend(piece.iter().copied());
                } else {
                    out.push(l);
                }
            }
            Word::from_letters(out)
        };
        Ok(match *self {
            Move::Contract { segment: s } => relabel_without(w, s),
            Move::Reorient { segment: s } => subst(s, Word::from_letters(vec![Letter::neg(s)])),
            Move::Merge { segment: s } => {
                let o = before.occurrences()[s][0];
                let w1 = rotate_to(before.faces()[o.0].letters(), o.1);
                // face reads s^ε U, so s = U^{-ε}
                let u = Word::from_letters(w1[1..].to_vec());
                let image = if w1[0].is_inverse() { u } else { u.inverse() };
                relabel_without(&subst(s, image), s)
            }
            Move::CutGlue { face, from, len, glue } => {
                let r = rotate_to(before.faces()[face].letters(), from);
                let (p, _) = r.split_at(len);
                let fresh = before.n_segments();
                let mut p1 = p.to_vec();
                p1.push(Letter::neg(fresh));
                let i = p1.iter().position(|l| l.generator() == glue).expect("checked by apply");
                let x = rotate_to(&p1, i);
                let u = Word::from_letters(x[1..].to_vec());
                let image = if x[0].is_inverse() { u } else { u.inverse() };
                subst(glue, image)
                    .iter()
                    .map(|&l| if l.generator() == fresh { Letter::new(glue, l.is_inverse()) } else { l })
                    .collect()
            }
        }
        .free_reduce())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: Move,
    pub after: SurfaceComplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub normal_form: NormalForm,
    pub characteristic: i64,
    pub orientable: bool,
    pub trace: Vec<TraceStep>,
}

impl Classification {
    /// Applies the recorded moves to `start` and checks every snapshot.
    pub fn replay(&self, start: &SurfaceComplex) -> bool {
        let mut cur = start.clone();
        for step in &self.trace {
            match step.mv.apply(&cur) {
                Ok(next) if next == step.after => cur = next,
                _ => return false,
            }
        }
        true
    }

    /// Carries a closed segment path of `start` through every move.
    pub fn map_word(&self, start: &SurfaceComplex, w: &Word) -> Result<Word, SurfaceError> {
        let mut before = start;
        let mut cur = w.clone();
        for step in &self.trace {
            cur = step.mv.map_word(before, &cur)?;
            before = &step.after;
        }
        Ok(cur)
    }

    pub fn result(&self) -> Option<&SurfaceComplex> {
        self.trace.last().map(|s| &s.after)
    }
}

struct Run {
    cur: SurfaceComplex,
    trace: Vec<TraceStep>,
}

impl Run {
    fn step(&mut self, mv: Move) -> Result<(), SurfaceError> {
        let next = mv.apply(&self.cur)?;
        self.cur = next.clone();
        self.trace.push(TraceStep { mv, after: next });
        Ok(())
    }

    fn word(&self) -> &[Letter] {
        self.cur.faces()[0].letters()
    }

    fn positions(&self, g: usize) -> (usize, usize) {
        let w = self.word();
        let mut it = (0..w.len()).filter(|&i| w[i].generator() == g);
        (it.next().expect("two occurrences"), it.next().expect("two occurrences"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Atom {
    Square,
    Commutator,
}

/// Splits a cyclic word into squares `x x` and commutators `x y X Y`,
/// returning the starting offset and the atoms with their positions.
fn atoms(w: &[Letter]) -> Option<(usize, Vec<(usize, Atom)>)> {
    let n = w.len();
    let at = |i: usize| w[i % n];
    'offset: for off in 0..n.min(4) {
        let mut out = Vec::new();
        let mut i = off;
        while i < off + n {
            if at(i) == at(i + 1) && i + 2 <= off + n {
                out.push((i % n, Atom::Square));
                i += 2;
            } else if i + 4 <= off + n
                && at(i + 2) == at(i).inverse()
                && at(i + 3) == at(i + 1).inverse()
                && at(i).generator() != at(i + 1).generator()
            {
                out.push((i % n, Atom::Commutator));
                i += 4;
            } else {
                continue 'offset;
            }
        }
        return Some((off, out));
    }
    None
}

/// Generators already sitting in a square or a commutator.
fn settled(w: &[Letter], n_gens: usize) -> Vec<bool> {
    let n = w.len();
    let at = |i: usize| w[i % n];
    let mut done = vec![false; n_gens];
    for i in 0..n {
        if at(i) == at(i + 1) {
            done[at(i).generator()] = true;
        }
        if n >= 4
            && at(i + 2) == at(i).inverse()
            && at(i + 3) == at(i + 1).inverse()
            && at(i).generator() != at(i + 1).generator()
        {
            done[at(i).generator()] = true;
            done[at(i + 1).generator()] = true;
        }
    }
    done
}

fn squares_phase(run: &mut Run) -> Result<(), SurfaceError> {
    loop {
        let w = run.word();
        let n = w.len();
        let pick = (0..run.cur.n_segments()).find_map(|g| {
            let (i, j) = run.positions(g);
            let spread = j - i != 1 && !(i == 0 && j == n - 1);
            (w[i] == w[j] && spread).then_some((i, j))
        });
        let Some((i, j)) = pick else { return Ok(()) };
        let glue = w[i].generator();
        run.step(Move::CutGlue {
            face: 0,
            from: i,
            len: j - i,
            glue,
        })?;
    }
}

fn reorient_positive(run: &mut Run, pos: usize) -> Result<(), SurfaceError> {
    let l = run.word()[pos];
    if l.is_inverse() {
        run.step(Move::Reorient { segment: l.generator() })?;
    }
    Ok(())
}

fn commutators_phase(run: &mut Run) -> Result<(), SurfaceError> {
    loop {
        let w = run.word().to_vec();
        let done = settled(&w, run.cur.n_segments());
        let Some(a) = (0..run.cur.n_segments()).find(|&g| !done[g]) else {
            return Ok(());
        };
        let (i, j) = run.positions(a);
        if w[i] == w[j] {
            return Err(SurfaceError::Stalled("same-direction pair after squaring".into()));
        }
        let Some(k) = (i + 1..j).find(|&k| {
            let (p, q) = run.positions(w[k].generator());
            (p > i && p < j) != (q > i && q < j)
        }) else {
            return Err(SurfaceError::Stalled("opposite pair without a partner".into()));
        };
        let b = w[k].generator();
        reorient_positive(run, i)?;
        reorient_positive(run, k)?;
        // a X b Y A Z B U  ->  b a B A Z Y X U
        run.step(Move::CutGlue {
            face: 0,
            from: i,
            len: j - i + 1,
            glue: b,
        })?;
        let w2 = run.word().to_vec();
        let n = w2.len();
        let pb = (0..n).find(|&p| w2[p] == Letter::pos(b)).expect("glued segment present");
        let from = (pb + 1) % n;
        let len = (0..n)
            .find(|&t| w2[(from + t) % n] == Letter::neg(a))
            .expect("a⁻¹ present")
            + 1;
        run.step(Move::CutGlue { face: 0, from, len, glue: a })?;
    }
}

fn cross_caps_phase(run: &mut Run) -> Result<(), SurfaceError> {
    loop {
        let w = run.word().to_vec();
        let n = w.len();
        let Some((_, list)) = atoms(&w) else {
            return Err(SurfaceError::Stalled("word does not split into blocks".into()));
        };
        let m = list.len();
        let Some(t) = (0..m).find(|&t| list[t].1 == Atom::Square && list[(t + 1) % m].1 == Atom::Commutator) else {
            return Ok(());
        };
        let q = list[t].0;
        let c = list[(t + 1) % m].0;
        reorient_positive(run, q)?;
        reorient_positive(run, c)?;
        reorient_positive(run, (c + 1) % n)?;
        let w = run.word();
        let (s, a, b) = (w[q].generator(), w[c].generator(), w[(c + 1) % n].generator());
        let rest = n - 6;
        // s s a b A B W  ->  S S a a B B W
        run.step(Move::CutGlue {
            face: 0,
            from: (q + 1) % n,
            len: 2,
            glue: a,
        })?;
        run.step(Move::CutGlue {
            face: 0,
            from: 1,
            len: 2 + rest,
            glue: s,
        })?;
        run.step(Move::CutGlue {
            face: 0,
            from: 1,
            len: 4 + rest,
            glue: b,
        })?;
    }
}

fn read_off(w: &[Letter]) -> Result<NormalForm, SurfaceError> {
    let Some((_, list)) = atoms(w) else {
        return Err(SurfaceError::Stalled("word does not split into blocks".into()));
    };
    let squares = list.iter().filter(|a| a.1 == Atom::Square).count();
    let comms = list.len() - squares;
    match (squares, comms) {
        (0, g) => Ok(NormalForm::Orientable(g)),
        (g, 0) => Ok(NormalForm::NonOrientable(g)),
        _ => Err(SurfaceError::Stalled("mixed squares and commutators".into())),
    }
}

pub fn classify(c: &SurfaceComplex) -> Result<Classification, SurfaceError> {
    let cert = validate_manifold(c)?;
    let chi = characteristic(c);
    let orient = orientable(c, &cert);
    let mut run = Run {
        cur: c.clone(),
        trace: Vec::new(),
    };
    // contract a spanning tree
    loop {
        let pick = (0..run.cur.n_segments()).find(|&s| {
            let (a, b) = run.cur.graph().endpoints(s);
            a != b && Move::Contract { segment: s }.apply(&run.cur).is_ok()
        });
        match pick {
            Some(s) => run.step(Move::Contract { segment: s })?,
            None => break,
        }
    }
    // fuse faces
    while run.cur.n_faces() > 1 {
        let occ = run.cur.occurrences();
        let pick = (0..run.cur.n_segments())
            .find(|&s| occ[s][0].0 != occ[s][1].0 && Move::Merge { segment: s }.apply(&run.cur).is_ok());
        match pick {
            Some(s) => run.step(Move::Merge { segment: s })?,
            None => break,
        }
    }
    let nf = if chi == -2 {
        NormalForm::Sphere
    } else {
        if run.cur.n_points() != 1 || run.cur.n_faces() != 1 {
            return Err(SurfaceError::Stalled(format!(
                "{} points and {} faces remain",
                run.cur.n_points(),
                run.cur.n_faces()
            )));
        }
        squares_phase(&mut run)?;
        commutators_phase(&mut run)?;
        cross_caps_phase(&mut run)?;
        read_off(run.word())?
    };
    if nf.characteristic() != chi || nf.is_orientable() != orient {
        return Err(SurfaceError::Stalled(format!("{} disagrees with c={} orientable={}", nf, chi, orient)));
    }
    Ok(Classification {
        normal_form: nf,
        characteristic: chi,
        orientable: orient,
        trace: run.trace,
    })
}

/// Generator images turning a normal-form word (in some rotation) into the
/// standard `a_1 b_1 A_1 B_1 ..` or `s_1 s_1 s_2 s_2 ..`.
fn standard_images(face: &Word, orientable: bool) -> Option<Vec<Letter>> {
    let f = face.letters();
    let n = f.len();
    let block = if orientable { 4 } else { 2 };
    if n == 0 || !n.is_multiple_of(block) {
        return None;
    }
    let at = |i: usize| f[i % n];
    'offset: for off in 0..block {
        let mut image: Vec<Option<Letter>> = vec![None; n / 2];
        for (j, i) in (off..off + n).step_by(block).enumerate() {
            let x = at(i);
            if orientable {
                let y = at(i + 1);
                if at(i + 2) != x.inverse() || at(i + 3) != y.inverse() {
                    continue 'offset;
                }
                image[x.generator()] = Some(Letter::new(2 * j, x.is_inverse()));
                image[y.generator()] = Some(Letter::new(2 * j + 1, y.is_inverse()));
            } else {
                if at(i + 1) != x {
                    continue 'offset;
                }
                image[x.generator()] = Some(Letter::new(j, x.is_inverse()));
            }
        }
        return image.into_iter().collect();
    }
    None
}

/// Classifies `c` and carries the closed path `w` to the standard
/// generators of the normal form.
pub fn standard_word(c: &SurfaceComplex, w: &Word) -> Result<(NormalForm, Word), SurfaceError> {
    if let Some(&first) = w.letters().first() {
        let start = c.graph().tail(Dart::from_letter(first));
        if !c.graph().path_from_word(start, w)?.is_closed(c.graph()) {
            return Err(SurfaceError::NotClosed(w.to_string()));
        }
    }
    let cl = classify(c)?;
    if cl.normal_form == NormalForm::Sphere {
        return Ok((NormalForm::Sphere, Word::empty()));
    }
    let image = cl.map_word(c, w)?;
    let end = cl.result().unwrap_or(c);
    let images = standard_images(&end.faces()[0], cl.orientable)
        .ok_or_else(|| SurfaceError::Stalled(end.faces()[0].to_string()))?;
    let out = image
        .iter()
        .map(|&l| {
            let m = images[l.generator()];
            if l.is_inverse() {
                m.inverse()
            } else {
                m
            }
        })
        .collect();
    Ok((cl.normal_form, out))
}
