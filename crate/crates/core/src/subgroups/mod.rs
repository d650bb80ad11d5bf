//! Subgroups of finite index given by permutation actions on cosets.

mod commutator;
mod modular;
mod rewrite;

pub use commutator::{commutator_operator_polynomial, commutator_relation_row, exponent_map};
pub use modular::{congruence_subgroup_report, modular_congruence_table, CongruenceReport};
pub use rewrite::{conjugation_action, reidemeister_schreier, RewrittenPresentation};

use std::collections::VecDeque;

use thiserror::Error;

use crate::perm::{closure, is_transitive, Perm, PermError};
use crate::presentations::Presentation;
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("expected {expected} permutations, one per generator, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("the action is not transitive")]
    Intransitive,
    #[error("relator {relator} moves coset {coset}")]
    RelatorViolation { relator: usize, coset: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("word does not lie in the subgroup (ends at coset {0})")]
    NotInSubgroup(usize),
    #[error("the subgroup is not normal")]
    NotNormal,
    #[error("expected two generators and one relator")]
    NotOneRelator,
    #[error("abelianization is not infinite cyclic (exponent sums have gcd {0})")]
    NotInfiniteCyclic(i64),
}

/// Right action of the generators on cosets `0..n`; coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    actions: Vec<Perm>,
    inverses: Vec<Perm>,
    n_cosets: usize,
}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    pub fn n_generators(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, g: usize) -> &Perm {
        &self.actions[g]
    }

    pub fn actions(&self) -> &[Perm] {
        &self.actions
    }

    pub fn act_letter(&self, c: usize, l: Letter) -> usize {
        if l.is_inverse() {
            self.inverses[l.generator()].apply(c)
        } else {
            self.actions[l.generator()].apply(c)
        }
    }

    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.iter().fold(c, |c, &l| self.act_letter(c, l))
    }

    /// Permutation of the cosets induced by `w`.
    pub fn word_permutation(&self, w: &Word) -> Perm {
        let imgs = (0..self.n_cosets).map(|c| self.act(c, w)).collect();
        Perm::from_images(imgs).expect("a word acts bijectively")
    }

    /// Whether the subgroup is normal: the permutation group acts regularly.
    pub fn is_normal(&self) -> bool {
        closure(&self.actions, self.n_cosets, self.n_cosets + 1)
            .is_some_and(|g| g.len() == self.n_cosets)
    }
}

/// Validates a permutation action as a coset table of `p`.
pub fn coset_table_from_permutations(
    p: &Presentation,
    images: Vec<Perm>,
) -> Result<CosetTable, SubgroupError> {
    if images.len() != p.n_generators() {
        return Err(SubgroupError::GeneratorCount {
            expected: p.n_generators(),
            found: images.len(),
        });
    }
    let n = images.first().map_or(1, |q| q.degree());
    for q in &images {
        if q.degree() != n {
            return Err(PermError::DegreeMismatch(n, q.degree()).into());
        }
    }
    if !is_transitive(&images, n) {
        return Err(SubgroupError::Intransitive);
    }
    let t = CosetTable {
        inverses: images.iter().map(Perm::inverse).collect(),
        actions: images,
        n_cosets: n,
    };
    for (i, r) in p.relators().iter().enumerate() {
        for c in 0..n {
            if t.act(c, r) != c {
                return Err(SubgroupError::RelatorViolation { relator: i, coset: c });
            }
        }
    }
    Ok(t)
}

/// Prefix-closed coset representatives; `reps[0]` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierTransversal {
    reps: Vec<Word>,
}

impl SchreierTransversal {
    pub fn rep(&self, c: usize) -> &Word {
        &self.reps[c]
    }

    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    /// Every prefix of every representative is itself a representative.
    pub fn is_prefix_closed(&self) -> bool {
        self.reps.iter().all(|r| {
            (0..r.len()).all(|k| {
                let pre = Word::from_letters(r.letters()[..k].to_vec());
                self.reps.contains(&pre)
            })
        })
    }
}

/// Letters in the default tie-break order: `a, A, b, B, ..`.
pub fn default_letter_order(n_generators: usize) -> Vec<Letter> {
    (0..n_generators)
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect()
}

/// Breadth-first transversal: shortest representatives, ties broken by the
/// default letter order.
pub fn schreier_transversal(t: &CosetTable) -> SchreierTransversal {
    schreier_transversal_ordered(t, &default_letter_order(t.n_generators()))
}

/// Breadth-first transversal exploring letters in the given order.
pub fn schreier_transversal_ordered(t: &CosetTable, order: &[Letter]) -> SchreierTransversal {
    let n = t.n_cosets();
    let mut reps: Vec<Option<Word>> = vec![None; n];
    reps[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for &l in order {
            let d = t.act_letter(c, l);
            if reps[d].is_none() {
                let mut w = reps[c].clone().unwrap();
                w.push(l);
                reps[d] = Some(w);
                queue.push_back(d);
            }
        }
    }
    SchreierTransversal {
        reps: reps.into_iter().map(|r| r.expect("transitive table")).collect(),
    }
}
