//! Normal forms in `⟨S_1, S_2 | S_1^{a_1} S_2^{a_2}⟩`.
//!
//! `z = S_1^{a_1} = S_2^{-a_2}` is central and the quotient by `⟨z⟩` is the
//! free product of cyclic groups of orders `a_1`, `a_2`. Every element is
//! uniquely an alternating syllable word with exponents in `[0, a_i)` times a
//! power of `z`.

use thiserror::Error;

use super::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusTypeError {
    #[error("exponents must be at least 2, got ({0}, {1})")]
    BadExponents(i64, i64),
    #[error("letter {0} is outside the two-generator alphabet")]
    ForeignLetter(Letter),
}

/// Returns the syllable part followed by `S_1^{k a_1}`, freely reduced.
/// Empty iff `w` is the identity.
pub fn normal_form_torus_type(w: &Word, a1: i64, a2: i64) -> Result<Word, TorusTypeError> {
    if a1 < 2 || a2 < 2 {
        return Err(TorusTypeError::BadExponents(a1, a2));
    }
    let a = [a1, a2];
    // (generator, exponent in 1..a_g)
    let mut stack: Vec<(usize, i64)> = Vec::new();
    let mut k: i64 = 0;
    for &l in w {
        let g = l.generator();
        if g > 1 {
            return Err(TorusTypeError::ForeignLetter(l));
        }
        let base = match stack.last() {
            Some(&(h, r)) if h == g => {
                stack.pop();
                r
            }
            _ => 0,
        };
        let total = base + l.sign();
        let carry = total.div_euclid(a[g]);
        let r = total.rem_euclid(a[g]);
        // S_1^{a_1} = z, S_2^{a_2} = z^{-1}
        k += if g == 0 { carry } else { -carry };
        if r != 0 {
            stack.push((g, r));
        }
    }
    let mut out = Vec::new();
    for (g, r) in stack {
        out.extend(std::iter::repeat_n(Letter::pos(g), r as usize));
    }
    Ok(Word::from_letters(out).concat(&Word::power_of(0, k * a1)).free_reduce())
}
