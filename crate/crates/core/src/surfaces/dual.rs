//! The dual complex: faces become points, segments cross over, and each
//! point becomes the face bounded by its star.

use super::{star_step, validate_manifold, ManifoldCert, SurfaceComplex, SurfaceError};
use crate::complexes::Graph1;
use crate::words::{Letter, Word};

/// Dual segment `s*` runs from the face of the first occurrence of `s` to
/// the face of the second.
pub fn dual_complex(c: &SurfaceComplex, cert: &ManifoldCert) -> Result<SurfaceComplex, SurfaceError> {
    let segs = cert.incidence.iter().map(|[o1, o2]| (o1.0, o2.0)).collect();
    let graph = Graph1::new(c.n_faces(), segs)?;
    let mut faces = Vec::with_capacity(c.n_points());
    for walk in &cert.corners {
        let first = walk[0];
        let (mut at, mut via_next) = (first, true);
        let mut w = Vec::with_capacity(walk.len());
        loop {
            let (next, exit, _, nv) = star_step(c, &cert.incidence, at, via_next);
            let s = c.faces()[exit.0][exit.1].generator();
            w.push(Letter::new(s, cert.incidence[s][0] != exit));
            if next == first && nv {
                break;
            }
            at = next;
            via_next = nv;
        }
        faces.push(Word::from_letters(w));
    }
    SurfaceComplex::new(graph, faces)
}

/// Validates `c` and returns its dual.
pub fn dual_of(c: &SurfaceComplex) -> Result<SurfaceComplex, SurfaceError> {
    dual_complex(c, &validate_manifold(c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::{characteristic, classify, normal_form_complex, orientable, NormalForm, SurfaceNames};

    fn poly(w: &str) -> SurfaceComplex {
        SurfaceNames::parse(&format!("polygon {}", w)).unwrap().0
    }

    fn counts(c: &SurfaceComplex) -> (usize, usize, usize) {
        (c.n_points(), c.n_segments(), c.n_faces())
    }

    #[test]
    fn torus_square() {
        let d = dual_of(&poly("a b A B")).unwrap();
        assert_eq!(counts(&d), (1, 2, 1));
        assert_eq!(classify(&d).unwrap().normal_form, NormalForm::Orientable(1));
    }

    #[test]
    fn sphere() {
        let d = dual_of(&normal_form_complex(NormalForm::Sphere)).unwrap();
        assert_eq!(counts(&d), (1, 1, 2));
        assert_eq!(characteristic(&d), -2);
        let dd = dual_of(&d).unwrap();
        assert_eq!(counts(&dd), (2, 1, 1));
    }

    #[test]
    fn involution_and_invariants() {
        for w in ["a b A B", "a a", "a b a B", "a b c A B C", "a b A B c d C D", "a a b b c c", "a b c a b c"] {
            let c = poly(w);
            let cert = validate_manifold(&c).unwrap();
            let d = dual_complex(&c, &cert).unwrap();
            let dcert = validate_manifold(&d).unwrap();
            assert_eq!(characteristic(&d), characteristic(&c), "{}", w);
            assert_eq!(orientable(&d, &dcert), orientable(&c, &cert), "{}", w);
            let dd = dual_of(&d).unwrap();
            assert_eq!(counts(&dd), counts(&c), "{}", w);
            assert_eq!(classify(&dd).unwrap().normal_form, classify(&c).unwrap().normal_form);
        }
    }
}
