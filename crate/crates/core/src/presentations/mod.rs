//! Finitely presented groups `⟨S_1, .., S_n | R_1, .., R_m⟩`.

mod format;
mod nielsen;
mod simplify;
mod standard;
mod tietze;

pub use format::{GeneratorNames, PresentationParseError};
pub use nielsen::{NielsenError, NielsenMove};
pub use simplify::{power_relator_orders, simplify, Simplified};
pub use standard::{
    principal_group_presentation, surface_presentation, surface_relator, BranchData,
    StandardError,
};
pub use tietze::{tietze_apply, ConjugateFactor, TietzeError, TietzeMove};

use thiserror::Error;

use crate::matrices::IntMatrix;
use crate::words::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator {relator} uses generator {generator} but there are only {n} generators")]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        n: usize,
    },
}

/// Generators are positional (`0..n`). Relators are stored freely reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Presentation {
    n_generators: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(n_generators: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= n_generators {
                    return Err(PresentationError::GeneratorOutOfRange {
                        relator: i,
                        generator: g,
                        n: n_generators,
                    });
                }
            }
        }
        Ok(Presentation {
            n_generators,
            relators: relators.iter().map(Word::free_reduce).collect(),
        })
    }

    /// The free group of rank `n`.
    pub fn free(n: usize) -> Self {
        Presentation {
            n_generators: n,
            relators: Vec::new(),
        }
    }

    /// Parses relators in the default alphabet (`a`, `b`, ..).
    pub fn parse(n_generators: usize, relators: &[&str]) -> Result<Self, PresentationParseError> {
        let mut rels = Vec::new();
        for r in relators {
            rels.push(r.parse::<Word>()?);
        }
        Ok(Presentation::new(n_generators, rels)?)
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator(&self, i: usize) -> &Word {
        &self.relators[i]
    }

    /// Entry `(i, k)` is the exponent sum of generator `k` in relator `i`.
    pub fn abelianized_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.n_generators))
            .collect();
        IntMatrix::from_i64_rows(self.relators.len(), self.n_generators, &rows)
    }

    pub(crate) fn push_relator(&mut self, r: Word) {
        self.relators.push(r.free_reduce());
    }

    pub(crate) fn from_parts_unchecked(n_generators: usize, relators: Vec<Word>) -> Self {
        Presentation {
            n_generators,
            relators,
        }
    }
}
