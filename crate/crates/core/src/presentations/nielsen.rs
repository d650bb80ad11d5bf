//! Elementary Nielsen moves, applied as substitutions.

use thiserror::Error;

use super::Presentation;
use crate::words::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NielsenError {
    #[error("replace move needs two distinct generators, got {0} twice")]
    SameGenerator(usize),
    #[error("generator {generator} out of range for {n} generators")]
    OutOfRange { generator: usize, n: usize },
    #[error("permutation has length {found}, expected {n}")]
    BadPermutation { found: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NielsenMove {
    /// Generator `i` is sent to generator `perm[i]`.
    Permute(Vec<usize>),
    /// `S_i ↦ S_i⁻¹`.
    Invert(usize),
    /// `S_a ↦ S_a S_b` (or `S_a S_b⁻¹` when `inverse`).
    Replace { a: usize, b: usize, inverse: bool },
}

impl NielsenMove {
    pub fn validate(&self, n: usize) -> Result<(), NielsenError> {
        let check = |g: usize| {
            if g < n {
                Ok(())
            } else {
                Err(NielsenError::OutOfRange { generator: g, n })
            }
        };
        match self {
            NielsenMove::Permute(p) => {
                if p.len() != n {
                    return Err(NielsenError::BadPermutation { found: p.len(), n });
                }
                let mut seen = vec![false; n];
                for &i in p {
                    check(i)?;
                    if seen[i] {
                        return Err(NielsenError::BadPermutation { found: p.len(), n });
                    }
                    seen[i] = true;
                }
                Ok(())
            }
            NielsenMove::Invert(i) => check(*i),
            NielsenMove::Replace { a, b, .. } => {
                check(*a)?;
                check(*b)?;
                if a == b {
                    return Err(NielsenError::SameGenerator(*a));
                }
                Ok(())
            }
        }
    }

    /// Image of each generator.
    pub fn images(&self, n: usize) -> Result<Vec<Word>, NielsenError> {
        self.validate(n)?;
        let mut im: Vec<Word> = (0..n).map(Word::generator).collect();
        match self {
            NielsenMove::Permute(p) => {
                for (i, &j) in p.iter().enumerate() {
                    im[i] = Word::generator(j);
                }
            }
            NielsenMove::Invert(i) => im[*i] = im[*i].inverse(),
            NielsenMove::Replace { a, b, inverse } => {
                let mut w = Word::generator(*b);
                if *inverse {
                    w = w.inverse();
                }
                im[*a] = Word::generator(*a).concat(&w);
            }
        }
        Ok(im)
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> NielsenMove {
        match self {
            NielsenMove::Permute(p) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                NielsenMove::Permute(inv)
            }
            NielsenMove::Invert(i) => NielsenMove::Invert(*i),
            NielsenMove::Replace { a, b, inverse } => NielsenMove::Replace {
                a: *a,
                b: *b,
                inverse: !*inverse,
            },
        }
    }

    pub fn apply_word(&self, w: &Word, n: usize) -> Result<Word, NielsenError> {
        Ok(w.substitute(&self.images(n)?))
    }

    pub fn apply(&self, p: &Presentation) -> Result<Presentation, NielsenError> {
        let im = self.images(p.n_generators())?;
        let rels = p.relators().iter().map(|r| r.substitute(&im)).collect();
        Ok(Presentation::from_parts_unchecked(p.n_generators(), rels))
    }
}
