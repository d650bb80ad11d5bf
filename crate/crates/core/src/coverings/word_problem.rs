//! Two solvers for the word problem of `⟨a_i, b_i | Π [a_i, b_i]⟩`:
//! Dehn's greedy shortening and rewriting in the infinite cyclic covering.
//! Generators are `a_i = 2i`, `b_i = 2i + 1`.

use super::branched::SurfaceCoverSpec;
use super::CoveringError;
use crate::perm::Perm;
use crate::presentations::surface_relator;
use crate::surfaces::{standard_word, SurfaceComplex};
use crate::words::{Letter, Word};

fn check_alphabet(w: &Word, n: usize) -> Result<(), CoveringError> {
    match w.iter().find(|l| l.generator() >= n) {
        Some(l) => Err(CoveringError::ForeignGenerator(l.generator())),
        None => Ok(()),
    }
}

fn check_genus(g: usize) -> Result<(), CoveringError> {
    if g < 2 {
        return Err(CoveringError::GenusTooSmall(g, 2));
    }
    Ok(())
}

/// Rotations of the relator and of its inverse.
fn relator_rotations(g: usize) -> Vec<Vec<Letter>> {
    let r = surface_relator(true, g);
    let ri = r.inverse();
    let n = r.len();
    let mut out = Vec::with_capacity(2 * n);
    for w in [&r, &ri] {
        for i in 0..n {
            out.push(w.rotate_left(i).into_letters());
        }
    }
    out
}

/// Cyclic Dehn reduction: while some cyclic subword of length at least
/// `2g + 1` agrees with a rotation of `R^{±1}`, replace it by the inverse of
/// the rest of that rotation.
pub fn dehn_reduce(w: &Word, g: usize) -> Result<Word, CoveringError> {
    check_genus(g)?;
    check_alphabet(w, 2 * g)?;
    let rots = relator_rotations(g);
    let len = 4 * g;
    let mut cur = w.cyclic_core().into_letters();
    'outer: loop {
        let n = cur.len();
        if n < 2 * g + 1 {
            break;
        }
        for i in 0..n {
            for rot in &rots {
                let mut m = 0;
                while m < n && m < len && cur[(i + m) % n] == rot[m] {
                    m += 1;
                }
                if m > 2 * g {
                    let mut next: Vec<Letter> = rot[m..].iter().rev().map(|l| l.inverse()).collect();
                    next.extend((m..n).map(|t| cur[(i + t) % n]));
                    let reduced = Word::from_letters(next).cyclic_core().into_letters();
                    debug_assert!(reduced.len() < n);
                    cur = reduced;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(Word::from_letters(cur))
}

pub fn dehn_is_identity(w: &Word, g: usize) -> Result<bool, CoveringError> {
    Ok(dehn_reduce(w, g)?.is_empty())
}

/// `S_{i,k} = a_1^k S_i a_1^{-k}` for a generator `i ≠ a_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shifted {
    gen: usize,
    shift: i64,
    inverse: bool,
}

impl Shifted {
    fn inv(self) -> Shifted {
        Shifted {
            inverse: !self.inverse,
            ..self
        }
    }
}

fn push_reduced(out: &mut Vec<Shifted>, x: Shifted) {
    if out.last() == Some(&x.inv()) {
        out.pop();
    } else {
        out.push(x);
    }
}

/// `C_k = Π_{j ≥ 2} [a_j, b_j]` read on sheet `k`.
fn window(g: usize, k: i64) -> Vec<Shifted> {
    let mut out = Vec::new();
    for j in 1..g {
        let (a, b) = (2 * j, 2 * j + 1);
        for (gen, inverse) in [(a, false), (b, false), (a, true), (b, true)] {
            out.push(Shifted { gen, shift: k, inverse });
        }
    }
    out
}

fn inverse_of(w: &[Shifted]) -> Vec<Shifted> {
    w.iter().rev().map(|x| x.inv()).collect()
}

/// Expansion of `b_1` on sheet `k` over `b_1` on sheet 0 and the free
/// generators. Sheet `k` relation: `y_{k+1} y_k^{-1} C_k = 1`.
fn expand_b1(g: usize, k: i64) -> Vec<Shifted> {
    let y0 = Shifted { gen: 1, shift: 0, inverse: false };
    let mut out = Vec::new();
    if k > 0 {
        for t in (0..k).rev() {
            out.extend(inverse_of(&window(g, t)));
        }
    } else {
        for t in k..0 {
            out.extend(window(g, t));
        }
    }
    out.push(y0);
    out
}

/// Word problem by rewriting in the kernel of the exponent sum of `a_1`,
/// which is free on `b_1` at sheet 0 and all shifts of the other
/// generators once every other shift of `b_1` is eliminated.
pub fn cyclic_cover_is_identity(w: &Word, g: usize) -> Result<bool, CoveringError> {
    check_genus(g)?;
    check_alphabet(w, 2 * g)?;
    let mut sheet = 0i64;
    let mut out: Vec<Shifted> = Vec::new();
    for &l in w {
        match (l.generator(), l.is_inverse()) {
            (0, false) => sheet += 1,
            (0, true) => sheet -= 1,
            (gen, inverse) => {
                let x = Shifted { gen, shift: sheet, inverse };
                if gen == 1 && sheet != 0 {
                    let mut e = expand_b1(g, sheet);
                    if inverse {
                        e = inverse_of(&e);
                    }
                    for y in e {
                        push_reduced(&mut out, y);
                    }
                } else {
                    push_reduced(&mut out, x);
                }
            }
        }
    }
    Ok(sheet == 0 && out.is_empty())
}

/// The torus group is free abelian on `a`, `b`.
pub fn torus_is_identity(w: &Word) -> Result<bool, CoveringError> {
    check_alphabet(w, 2)?;
    Ok(w.exponent_sum(0) == 0 && w.exponent_sum(1) == 0)
}

/// Word problem for `⟨s_1..s_g | s_1² ⋯ s_g²⟩`. Words of odd length are
/// orientation reversing, hence nontrivial. Even words lift to the
/// orientable double cover, are carried to its normal form by the
/// classification trace, and are decided there.
pub fn non_orientable_is_identity(w: &Word, g: usize) -> Result<bool, CoveringError> {
    if g == 0 {
        return Err(CoveringError::GenusTooSmall(0, 1));
    }
    check_alphabet(w, g)?;
    let w = w.free_reduce();
    if w.len() % 2 == 1 {
        return Ok(false);
    }
    if g == 1 {
        return Ok(true);
    }
    let base = SurfaceComplex::polygon(g, surface_relator(false, g))?;
    let swap = Perm::from_images(vec![1, 0])?;
    let spec = SurfaceCoverSpec::new(base, 2, vec![swap; g])?;
    let (cover, _) = super::build_surface_cover(&spec)?;
    let (lift, end) = spec.lift(&w, 0);
    debug_assert_eq!(end, 0);
    let (_, standard) = standard_word(&cover, &lift)?;
    if g == 2 {
        torus_is_identity(&standard)
    } else {
        dehn_is_identity(&standard, g - 1)
    }
}
