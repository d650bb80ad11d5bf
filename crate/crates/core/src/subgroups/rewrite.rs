//! Reidemeister-Schreier rewriting.
//!
//! The subgroup is generated by `U_{G,S} = G · S · rep(GS)⁻¹`. Labels whose
//! word is freely trivial (the edges of the transversal tree) are dropped;
//! the rest become the generators of the rewritten presentation, numbered
//! in order of `(coset, generator)`.

use super::{schreier_transversal, CosetTable, SchreierTransversal, SubgroupError};
use crate::presentations::Presentation;
use crate::words::{Letter, Word};

#[derive(Clone, Debug)]
pub struct RewrittenPresentation {
    table: CosetTable,
    transversal: SchreierTransversal,
    /// Indexed by `coset * n + generator`; `None` for trivial labels.
    label_of: Vec<Option<usize>>,
    labels: Vec<(usize, usize)>,
    presentation: Presentation,
}

impl RewrittenPresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn transversal(&self) -> &SchreierTransversal {
        &self.transversal
    }

    /// `(coset, generator)` of each surviving label, by generator index.
    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn label_index(&self, coset: usize, generator: usize) -> Option<usize> {
        self.label_of[coset * self.table.n_generators() + generator]
    }

    pub fn is_trivial_label(&self, coset: usize, generator: usize) -> bool {
        self.label_index(coset, generator).is_none()
    }

    /// `G · S · rep(GS)⁻¹`, freely reduced, in the original generators.
    pub fn label_word(&self, coset: usize, generator: usize) -> Word {
        label_word(&self.table, &self.transversal, coset, generator)
    }

    /// Rewrites `w` read from `coset`, returning the label word and the
    /// coset where reading ends.
    pub fn rewrite_from(&self, coset: usize, w: &Word) -> (Word, usize) {
        let n = self.table.n_generators();
        let mut c = coset;
        let mut out = Vec::new();
        for &l in w {
            let g = l.generator();
            if l.is_inverse() {
                let d = self.table.act_letter(c, l);
                if let Some(i) = self.label_of[d * n + g] {
                    out.push(Letter::neg(i));
                }
                c = d;
            } else {
                if let Some(i) = self.label_of[c * n + g] {
                    out.push(Letter::pos(i));
                }
                c = self.table.act_letter(c, l);
            }
        }
        (Word::from_letters(out), c)
    }

    /// Rewrites a word lying in the subgroup.
    pub fn rewrite(&self, w: &Word) -> Result<Word, SubgroupError> {
        let (u, c) = self.rewrite_from(0, w);
        if c != 0 {
            return Err(SubgroupError::NotInSubgroup(c));
        }
        Ok(u)
    }

    /// The original-generator word of a label word.
    pub fn expand(&self, u: &Word) -> Word {
        let mut out = Word::empty();
        for &l in u {
            let (c, g) = self.labels[l.generator()];
            let w = self.label_word(c, g);
            out = out.concat(&if l.is_inverse() { w.inverse() } else { w });
        }
        out.free_reduce()
    }
}

fn label_word(t: &CosetTable, tr: &SchreierTransversal, coset: usize, g: usize) -> Word {
    let d = t.act_letter(coset, Letter::pos(g));
    tr.rep(coset)
        .concat(&Word::generator(g))
        .concat(&tr.rep(d).inverse())
        .free_reduce()
}

/// Rewrites `p` for the subgroup of `t`, using the breadth-first transversal
/// unless one is supplied.
pub fn reidemeister_schreier(
    p: &Presentation,
    t: &CosetTable,
    transversal: Option<&SchreierTransversal>,
) -> RewrittenPresentation {
    let tr = transversal.cloned().unwrap_or_else(|| schreier_transversal(t));
    let n = t.n_generators();
    let mut label_of = vec![None; t.n_cosets() * n];
    let mut labels = Vec::new();
    for c in 0..t.n_cosets() {
        for g in 0..n {
            if !label_word(t, &tr, c, g).is_empty() {
                label_of[c * n + g] = Some(labels.len());
                labels.push((c, g));
            }
        }
    }
    let mut rw = RewrittenPresentation {
        table: t.clone(),
        transversal: tr,
        label_of,
        labels,
        presentation: Presentation::free(0),
    };
    let mut rels = Vec::new();
    for c in 0..t.n_cosets() {
        for r in p.relators() {
            rels.push(rw.rewrite_from(c, r).0);
        }
    }
    rw.presentation =
        Presentation::new(rw.labels.len(), rels).expect("labels are in range by construction");
    rw
}

/// Conjugation `U ↦ S U S⁻¹` by the letter `by`, as images of the label
/// generators. Requires a normal subgroup.
pub fn conjugation_action(r: &RewrittenPresentation, by: Letter) -> Result<Vec<Word>, SubgroupError> {
    if !r.table.is_normal() {
        return Err(SubgroupError::NotNormal);
    }
    let s = Word::from_letters(vec![by]);
    let mut images = Vec::new();
    for &(c, g) in &r.labels {
        let w = s.concat(&r.label_word(c, g)).concat(&s.inverse());
        images.push(r.rewrite(&w)?.free_reduce());
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::subgroups::coset_table_from_permutations;

    fn perm(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn index_one_is_a_copy() {
        let p = Presentation::parse(2, &["a a a", "b b"]).unwrap();
        let t = coset_table_from_permutations(&p, vec![perm(1, ""), perm(1, "")]).unwrap();
        let r = reidemeister_schreier(&p, &t, None);
        assert_eq!(r.presentation(), &p);
    }

    #[test]
    fn free_index_two() {
        let p = Presentation::free(2);
        let t = coset_table_from_permutations(&p, vec![perm(2, "(0 1)"), perm(2, "")]).unwrap();
        let r = reidemeister_schreier(&p, &t, None);
        assert_eq!(r.presentation().n_generators(), 3);
        assert!(r.presentation().relators().is_empty());
        // a a, b, a b A
        let words: Vec<Word> = r.labels().iter().map(|&(c, g)| r.label_word(c, g)).collect();
        assert_eq!(words, vec![w("b"), w("a a"), w("a b A")]);
    }

    #[test]
    fn rewrite_round_trip() {
        let p = Presentation::free(2);
        let t = coset_table_from_permutations(&p, vec![perm(3, "(0 1 2)"), perm(3, "(0 1)")]).unwrap();
        let r = reidemeister_schreier(&p, &t, None);
        let x = w("a a a b b a b A A B");
        assert_eq!(t.act(0, &x), 0);
        let u = r.rewrite(&x).unwrap();
        assert_eq!(r.expand(&u), x.free_reduce());
        assert!(r.rewrite(&w("a")).is_err());
    }

    #[test]
    fn conjugation_in_klein_four_cover() {
        let p = Presentation::free(2);
        let t = coset_table_from_permutations(&p, vec![perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")])
            .unwrap();
        let r = reidemeister_schreier(&p, &t, None);
        assert_eq!(r.presentation().n_generators(), 5);
        for by in [Letter::pos(0), Letter::pos(1)] {
            let there = conjugation_action(&r, by).unwrap();
            let back = conjugation_action(&r, by.inverse()).unwrap();
            for (i, img) in there.iter().enumerate() {
                assert_eq!(img.substitute(&back), Word::generator(i));
            }
        }
        let t3 = coset_table_from_permutations(&p, vec![perm(3, "(0 1)"), perm(3, "(1 2)")]).unwrap();
        let r3 = reidemeister_schreier(&p, &t3, None);
        assert_eq!(conjugation_action(&r3, Letter::pos(0)).unwrap_err(), SubgroupError::NotNormal);
    }
}
