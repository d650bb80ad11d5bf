//! Bounded presentation simplifier.
//!
//! Only three rules are used: drop trivial relators, drop relators that are
//! a cyclic rotation of another one or of its inverse, and eliminate a
//! generator occurring exactly once in some relator by substituting its
//! solution everywhere else. Relators come out cyclically reduced. The loop
//! stops at a fixpoint or after `10 · (generators + relators)` passes.

use std::collections::HashSet;

use super::Presentation;
use crate::words::{CyclicWord, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: Presentation,
    /// Image of every original generator as a word in the new generators.
    pub images: Vec<Word>,
    pub passes: usize,
}

fn cyclic_key(w: &Word) -> CyclicWord {
    let a = CyclicWord::new(w);
    let b = CyclicWord::new(&w.inverse());
    a.min(b)
}

fn tidy(rels: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in rels {
        let core = r.cyclic_core();
        if core.is_empty() {
            continue;
        }
        if seen.insert(cyclic_key(&core)) {
            out.push(core);
        }
    }
    out
}

/// Finds `(relator, generator)` with the generator occurring exactly once,
/// preferring short relators, then low generator indices.
fn pick(rels: &[Word], n: usize) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by_key(|&i| (rels[i].len(), i));
    for i in order {
        for g in 0..n {
            if rels[i].occurrences(g) == 1 {
                return Some((i, g));
            }
        }
    }
    None
}

/// Solves relator `r` for generator `g` (occurring once): `g = w`.
fn solve(r: &Word, g: usize) -> Word {
    let i = r.iter().position(|l| l.generator() == g).unwrap();
    let mut rot = r.rotate_left(i);
    if rot[0].is_inverse() {
        rot = rot.inverse();
        rot = rot.rotate_left(rot.len() - 1);
    }
    debug_assert_eq!(rot[0], Letter::pos(g));
    Word::from_letters(rot.letters()[1..].to_vec()).inverse()
}

pub fn simplify(p: &Presentation) -> Simplified {
    let mut n = p.n_generators();
    let mut rels = p.relators().to_vec();
    let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
    let bound = 10 * (n + rels.len()).max(1);
    let mut passes = 0;
    while passes < bound {
        passes += 1;
        rels = tidy(rels);
        let Some((ri, g)) = pick(&rels, n) else {
            break;
        };
        let value = solve(&rels[ri], g);
        let relabel = |h: usize| if h > g { h - 1 } else { h };
        let mut subst: Vec<Word> = (0..n).map(Word::generator).collect();
        subst[g] = value;
        let subst: Vec<Word> = subst.iter().map(|w| w.relabel(|h| Some(relabel(h)))).collect();
        rels.remove(ri);
        rels = rels.iter().map(|r| r.substitute(&subst)).collect();
        images = images.iter().map(|w| w.substitute(&subst)).collect();
        n -= 1;
    }
    rels = tidy(rels);
    Simplified {
        presentation: Presentation::from_parts_unchecked(n, rels),
        images,
        passes,
    }
}

/// Orders `k` of relators that are a power `U^k` of a single generator.
pub fn power_relator_orders(p: &Presentation) -> Vec<usize> {
    p.relators()
        .iter()
        .filter_map(|r| {
            let first = r.letters().first()?;
            r.iter().all(|l| l == first).then_some(r.len())
        })
        .collect()
}
