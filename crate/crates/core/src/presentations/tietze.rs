//! Tietze transformations carrying their own proofs.
//!
//! A relator move names the relator together with an expression of it as a
//! product of conjugates `L_i R_{k_i}^{±1} L_i⁻¹` of the other relators. A
//! generator move names the defining relator `S_m w⁻¹`.

use thiserror::Error;

use super::Presentation;
use crate::words::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TietzeError {
    #[error("witness refers to relator {0}, which does not exist")]
    NoSuchRelator(usize),
    #[error("witness for removing relator {0} uses that relator")]
    CircularWitness(usize),
    #[error("witness reduces to `{found}`, expected `{expected}`")]
    WitnessMismatch { found: Word, expected: Word },
    #[error("generator {0} does not exist")]
    NoSuchGenerator(usize),
    #[error("definition uses generator {0}, which does not exist yet")]
    DefinitionOutOfRange(usize),
    #[error("generator {generator} occurs {count} times in relator {relator}, expected exactly once")]
    NotSolvable {
        generator: usize,
        relator: usize,
        count: usize,
    },
    #[error("generator {generator} also occurs in relator {other}")]
    OccursElsewhere { generator: usize, other: usize },
}

/// `conjugator · R_relator^{±1} · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateFactor {
    pub conjugator: Word,
    pub relator: usize,
    pub inverse: bool,
}

impl ConjugateFactor {
    pub fn new(conjugator: Word, relator: usize, inverse: bool) -> Self {
        ConjugateFactor {
            conjugator,
            relator,
            inverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeMove {
    AddRelator {
        relator: Word,
        witness: Vec<ConjugateFactor>,
    },
    RemoveRelator {
        index: usize,
        witness: Vec<ConjugateFactor>,
    },
    /// New generator `S_n` with defining relator `S_n · definition⁻¹`.
    AddGenerator { definition: Word },
    /// Drops `generator` together with the single relator that defines it.
    /// Later generators are renumbered down by one.
    RemoveGenerator { generator: usize, relator: usize },
}

fn evaluate(p: &Presentation, witness: &[ConjugateFactor]) -> Result<Word, TietzeError> {
    let mut acc = Word::empty();
    for f in witness {
        let r = p
            .relators()
            .get(f.relator)
            .ok_or(TietzeError::NoSuchRelator(f.relator))?;
        let r = if f.inverse { r.inverse() } else { r.clone() };
        acc = acc
            .concat(&f.conjugator)
            .concat(&r)
            .concat(&f.conjugator.inverse())
            .free_reduce();
    }
    Ok(acc)
}

pub fn tietze_apply(p: &Presentation, mv: &TietzeMove) -> Result<Presentation, TietzeError> {
    match mv {
        TietzeMove::AddRelator { relator, witness } => {
            let target = relator.free_reduce();
            let found = evaluate(p, witness)?;
            if found != target {
                return Err(TietzeError::WitnessMismatch {
                    found,
                    expected: target,
                });
            }
            if let Some(g) = target.max_generator() {
                if g >= p.n_generators() {
                    return Err(TietzeError::NoSuchGenerator(g));
                }
            }
            let mut q = p.clone();
            q.push_relator(target);
            Ok(q)
        }
        TietzeMove::RemoveRelator { index, witness } => {
            let target = p
                .relators()
                .get(*index)
                .ok_or(TietzeError::NoSuchRelator(*index))?
                .clone();
            if witness.iter().any(|f| f.relator == *index) {
                return Err(TietzeError::CircularWitness(*index));
            }
            let found = evaluate(p, witness)?;
            if found != target {
                return Err(TietzeError::WitnessMismatch {
                    found,
                    expected: target,
                });
            }
            let mut rels = p.relators().to_vec();
            rels.remove(*index);
            Ok(Presentation::from_parts_unchecked(p.n_generators(), rels))
        }
        TietzeMove::AddGenerator { definition } => {
            if let Some(g) = definition.max_generator() {
                if g >= p.n_generators() {
                    return Err(TietzeError::DefinitionOutOfRange(g));
                }
            }
            let n = p.n_generators();
            let mut rels = p.relators().to_vec();
            rels.push(Word::generator(n).concat(&definition.inverse()).free_reduce());
            Ok(Presentation::from_parts_unchecked(n + 1, rels))
        }
        TietzeMove::RemoveGenerator { generator, relator } => {
            let g = *generator;
            if g >= p.n_generators() {
                return Err(TietzeError::NoSuchGenerator(g));
            }
            let r = p
                .relators()
                .get(*relator)
                .ok_or(TietzeError::NoSuchRelator(*relator))?;
            let count = r.occurrences(g);
            if count != 1 {
                return Err(TietzeError::NotSolvable {
                    generator: g,
                    relator: *relator,
                    count,
                });
            }
            for (i, other) in p.relators().iter().enumerate() {
                if i != *relator && other.occurrences(g) > 0 {
                    return Err(TietzeError::OccursElsewhere {
                        generator: g,
                        other: i,
                    });
                }
            }
            let rels = p
                .relators()
                .iter()
                .enumerate()
                .filter(|(i, _)| i != relator)
                .map(|(_, w)| w.relabel(|h| Some(if h > g { h - 1 } else { h })))
                .collect();
            Ok(Presentation::from_parts_unchecked(p.n_generators() - 1, rels))
        }
    }
}
