//! Free products of cyclic groups `⟨S_1, .., S_n | S_i^{a_i}⟩`.
//!
//! Elements have a unique reduced form as alternating syllables `S_i^r` with
//! `0 < r < a_i` (any nonzero `r` for an infinite factor, written `a_i = 0`).

use std::fmt;

use thiserror::Error;

use super::{least_rotation_by, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicProductError {
    #[error("unsupported order profile: generator {generator} has order {order}")]
    Unsupported { generator: usize, order: u64 },
}

/// Per-generator orders; `0` is infinite order. Generators past the end of
/// the list are treated as infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicOrders(pub Vec<u64>);

impl CyclicOrders {
    pub fn new(orders: Vec<u64>) -> Self {
        CyclicOrders(orders)
    }

    pub fn order(&self, g: usize) -> u64 {
        self.0.get(g).copied().unwrap_or(0)
    }

    fn normalize(&self, g: usize, e: i64) -> i64 {
        match self.order(g) {
            0 => e,
            a => e.rem_euclid(a as i64),
        }
    }

    fn check(&self) -> Result<(), CyclicProductError> {
        for (g, &a) in self.0.iter().enumerate() {
            if a == 1 {
                return Err(CyclicProductError::Unsupported { generator: g, order: a });
            }
        }
        Ok(())
    }
}

/// `S_generator^exponent` with the exponent already normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: i64,
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", Letter::pos(self.generator), self.exponent)
    }
}

fn push_syllable(stack: &mut Vec<Syllable>, orders: &CyclicOrders, g: usize, e: i64) {
    if let Some(top) = stack.last_mut() {
        if top.generator == g {
            let r = orders.normalize(g, top.exponent + e);
            if r == 0 {
                stack.pop();
            } else {
                top.exponent = r;
            }
            return;
        }
    }
    let r = orders.normalize(g, e);
    if r != 0 {
        stack.push(Syllable { generator: g, exponent: r });
    }
}

/// Reduced syllable sequence of `w`.
pub fn syllables(w: &Word, orders: &CyclicOrders) -> Vec<Syllable> {
    let mut stack = Vec::new();
    for l in w {
        push_syllable(&mut stack, orders, l.generator(), l.sign());
    }
    stack
}

fn syllables_to_word(s: &[Syllable]) -> Word {
    let mut out = Vec::new();
    for syl in s {
        let l = Letter::new(syl.generator, syl.exponent < 0);
        out.extend(std::iter::repeat_n(l, syl.exponent.unsigned_abs() as usize));
    }
    Word::from_letters(out)
}

/// Reduced form of `w`, written with nonnegative exponents on finite factors.
/// The result is empty iff `w` is the identity.
pub fn normal_form_cyclic_product(w: &Word, orders: &CyclicOrders) -> Word {
    syllables_to_word(&syllables(w, orders))
}

/// Cyclically reduced syllable sequence in least rotation.
fn cyclic_class(w: &Word, orders: &CyclicOrders) -> Vec<Syllable> {
    let mut s = syllables(w, orders);
    while s.len() >= 2 && s[0].generator == s[s.len() - 1].generator {
        let last = s.pop().unwrap();
        let r = orders.normalize(last.generator, s[0].exponent + last.exponent);
        if r == 0 {
            s.remove(0);
        } else {
            s[0].exponent = r;
        }
    }
    least_rotation_by(&s)
}

/// Conjugacy in the free product: cyclically reduced syllable sequences
/// agree up to rotation.
pub fn conjugate_in_cyclic_product(
    w1: &Word,
    w2: &Word,
    orders: &CyclicOrders,
) -> Result<bool, CyclicProductError> {
    orders.check()?;
    Ok(cyclic_class(w1, orders) == cyclic_class(w2, orders))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn modular() -> CyclicOrders {
        CyclicOrders::new(vec![3, 2])
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normal_form_cyclic_product(&w("a a a"), &modular()), Word::empty());
        assert_eq!(normal_form_cyclic_product(&w("a a a a b b b"), &modular()), w("a b"));
        assert_eq!(normal_form_cyclic_product(&w("A"), &modular()), w("a a"));
        assert_eq!(normal_form_cyclic_product(&w("a b b a"), &modular()), w("a a"));
        // infinite factor keeps signs
        let inf = CyclicOrders::new(vec![0, 2]);
        assert_eq!(normal_form_cyclic_product(&w("A b b A"), &inf), w("A A"));
    }

    #[test]
    fn conjugacy_examples() {
        let o = modular();
        assert!(conjugate_in_cyclic_product(&w("a b"), &w("b a"), &o).unwrap());
        assert!(!conjugate_in_cyclic_product(&w("a"), &w("A"), &o).unwrap());
        assert!(conjugate_in_cyclic_product(&w("b a b"), &w("a"), &o).unwrap());
        assert!(conjugate_in_cyclic_product(&w(""), &w("a a a"), &o).unwrap());
        assert!(conjugate_in_cyclic_product(&w("a"), &w("b"), &CyclicOrders::new(vec![1, 2])).is_err());
    }

    #[test]
    fn brute_force_s1_not_conjugate_to_inverse() {
        // every conjugate M a M⁻¹ with M of normal-form length <= 6
        let o = modular();
        let target = normal_form_cyclic_product(&w("A"), &o);
        let mut frontier = vec![Word::empty()];
        let mut all = vec![Word::empty()];
        for _ in 0..6 {
            let mut next = Vec::new();
            for m in &frontier {
                for s in ["a", "A", "b"] {
                    let cand = normal_form_cyclic_product(&m.concat(&w(s)), &o);
                    if cand.len() > m.len() && !all.contains(&cand) {
                        all.push(cand.clone());
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
        for m in &all {
            let c = normal_form_cyclic_product(&m.concat(&w("a")).concat(&m.inverse()), &o);
            assert_ne!(c, target);
        }
    }
}
