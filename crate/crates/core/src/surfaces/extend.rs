//! Elementary extensions: the inverses of the reductions used by
//! classification. None of them changes the characteristic or the
//! topological type.

use super::{SurfaceComplex, SurfaceError};
use crate::complexes::{Dart, Graph1};
use crate::words::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Put a new point in the middle of a segment; `s` keeps the first half
    /// and a new last segment takes the second.
    SubdivideSegment { segment: usize },
    /// Split face `face` by a new segment joining the corners at positions
    /// `i < j` of its boundary word.
    SplitFace { face: usize, i: usize, j: usize },
    /// Put a new point inside a face and join it to every corner.
    Cone { face: usize },
}

impl Extension {
    pub fn apply(&self, c: &SurfaceComplex) -> Result<SurfaceComplex, SurfaceError> {
        let bad = |m: &str| SurfaceError::BadMove(m.to_string());
        let mut segs = c.graph().segments().to_vec();
        let mut faces = c.faces().to_vec();
        let mut n_points = c.n_points();
        match *self {
            Extension::SubdivideSegment { segment: s } => {
                if s >= segs.len() {
                    return Err(bad("no such segment"));
                }
                let v = n_points;
                n_points += 1;
                let t = segs.len();
                let (_, b) = segs[s];
                segs[s].1 = v;
                segs.push((v, b));
                for w in &mut faces {
                    *w = w
                        .iter()
                        .flat_map(|&l| {
                            if l.generator() != s {
                                vec![l]
                            } else if l.is_inverse() {
                                vec![Letter::neg(t), l]
                            } else {
                                vec![l, Letter::pos(t)]
                            }
                        })
                        .collect();
                }
            }
            Extension::SplitFace { face, i, j } => {
                let w = faces.get(face).ok_or_else(|| bad("no such face"))?.clone();
                if !(i < j && j < w.len()) {
                    return Err(bad("corners out of range"));
                }
                let g = c.graph();
                let (from, to) = (g.tail(Dart::from_letter(w[j])), g.tail(Dart::from_letter(w[i])));
                let d = segs.len();
                segs.push((from, to));
                let mut first: Vec<Letter> = w.letters()[i..j].to_vec();
                first.push(Letter::pos(d));
                let mut second: Vec<Letter> = w.letters()[j..].iter().chain(&w.letters()[..i]).copied().collect();
                second.push(Letter::neg(d));
                faces[face] = Word::from_letters(first);
                faces.push(Word::from_letters(second));
            }
            Extension::Cone { face } => {
                let w = faces.get(face).ok_or_else(|| bad("no such face"))?.clone();
                let g = c.graph();
                let v = n_points;
                n_points += 1;
                let base = segs.len();
                for l in &w {
                    segs.push((v, g.tail(Dart::from_letter(*l))));
                }
                let k = w.len();
                let mut new_faces: Vec<Word> = (0..k)
                    .map(|i| Word::from_letters(vec![Letter::pos(base + i), w[i], Letter::neg(base + (i + 1) % k)]))
                    .collect();
                faces[face] = new_faces.remove(0);
                faces.extend(new_faces);
            }
        }
        SurfaceComplex::new(Graph1::new(n_points, segs)?, faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::{characteristic, classify, SurfaceNames};

    #[test]
    fn extensions_keep_type() {
        let (t, _) = SurfaceNames::parse("polygon a b A B").unwrap();
        let nf = classify(&t).unwrap().normal_form;
        for e in [
            Extension::SubdivideSegment { segment: 1 },
            Extension::SplitFace { face: 0, i: 0, j: 2 },
            Extension::Cone { face: 0 },
        ] {
            let c = e.apply(&t).unwrap();
            assert_eq!(characteristic(&c), 0);
            assert_eq!(classify(&c).unwrap().normal_form, nf);
        }
    }

    #[test]
    fn random_extensions() {
        use crate::surfaces::{normal_form_complex, NormalForm};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let forms = [
            NormalForm::Sphere,
            NormalForm::Orientable(1),
            NormalForm::Orientable(2),
            NormalForm::NonOrientable(1),
            NormalForm::NonOrientable(2),
            NormalForm::NonOrientable(3),
        ];
        for trial in 0..120 {
            let nf = forms[trial % forms.len()];
            let mut c = normal_form_complex(nf);
            for _ in 0..rng.gen_range(1..=30) {
                let e = match rng.gen_range(0..3) {
                    0 => Extension::SubdivideSegment { segment: rng.gen_range(0..c.n_segments()) },
                    1 => {
                        let f = rng.gen_range(0..c.n_faces());
                        let n = c.faces()[f].len();
                        if n < 2 {
                            continue;
                        }
                        let i = rng.gen_range(0..n - 1);
                        Extension::SplitFace { face: f, i, j: rng.gen_range(i + 1..n) }
                    }
                    _ => Extension::Cone { face: rng.gen_range(0..c.n_faces()) },
                };
                c = e.apply(&c).unwrap();
            }
            let r = classify(&c).unwrap();
            assert_eq!(r.normal_form, nf);
            assert!(r.replay(&c));
        }
    }
}
