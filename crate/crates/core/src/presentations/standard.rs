//! Canonical surface presentations and principal groups of branched
//! coverings.

use thiserror::Error;

use super::Presentation;
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StandardError {
    #[error("a non-orientable surface needs genus at least 1")]
    NonOrientableGenusZero,
    #[error("branch order {order} at position {index} is below {min}")]
    BadOrder { index: usize, order: u64, min: u64 },
}

/// `a1 b1 A1 B1 a2 b2 A2 B2 ..` (generators `2i`, `2i+1`) or `s1 s1 s2 s2 ..`.
pub fn surface_relator(orientable: bool, genus: usize) -> Word {
    let mut out = Vec::new();
    for i in 0..genus {
        if orientable {
            let (a, b) = (2 * i, 2 * i + 1);
            out.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
        } else {
            out.extend([Letter::pos(i), Letter::pos(i)]);
        }
    }
    Word::from_letters(out)
}

fn surface_rank(orientable: bool, genus: usize) -> usize {
    if orientable {
        2 * genus
    } else {
        genus
    }
}

/// `⟨a_i, b_i | Π [a_i, b_i]⟩` or `⟨s_i | Π s_i²⟩`; genus 0 orientable is the
/// trivial presentation.
pub fn surface_presentation(orientable: bool, genus: usize) -> Result<Presentation, StandardError> {
    if !orientable && genus == 0 {
        return Err(StandardError::NonOrientableGenusZero);
    }
    let rels = if genus == 0 {
        Vec::new()
    } else {
        vec![surface_relator(orientable, genus)]
    };
    Ok(Presentation::from_parts_unchecked(surface_rank(orientable, genus), rels))
}

/// Branching data of a regular branched covering over a normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    /// `k_1, .., k_{n-1}`, each at least 2.
    pub orders: Vec<u64>,
    /// `k_n`, at least 1.
    pub last: u64,
    pub genus: usize,
    pub orientable: bool,
    /// Point-type data: the last branch point has infinite order.
    pub infinite: bool,
}

impl BranchData {
    pub fn new(orders: Vec<u64>, last: u64, genus: usize, orientable: bool) -> Self {
        BranchData {
            orders,
            last,
            genus,
            orientable,
            infinite: false,
        }
    }

    /// Triangle data `(p, q, r)` over the sphere.
    pub fn triangle(p: u64, q: u64, r: u64) -> Self {
        BranchData::new(vec![p, q], r, 0, true)
    }

    pub fn validate(&self) -> Result<(), StandardError> {
        for (i, &k) in self.orders.iter().enumerate() {
            if k < 2 {
                return Err(StandardError::BadOrder { index: i + 1, order: k, min: 2 });
            }
        }
        if !self.infinite && self.last < 1 {
            return Err(StandardError::BadOrder {
                index: self.orders.len() + 1,
                order: self.last,
                min: 1,
            });
        }
        if !self.orientable && self.genus == 0 {
            return Err(StandardError::NonOrientableGenusZero);
        }
        Ok(())
    }
}

/// Generators `T_1..T_{n-1}` followed by the surface generators; relators
/// `T_i^{k_i}` and `(T_1 ⋯ T_{n-1} R(S))^{k_n}`. With an infinite last order
/// only the `T_i^{k_i}` remain.
pub fn principal_group_presentation(b: &BranchData) -> Result<Presentation, StandardError> {
    b.validate()?;
    let t = b.orders.len();
    let n = t + surface_rank(b.orientable, b.genus);
    let mut rels = Vec::new();
    for (i, &k) in b.orders.iter().enumerate() {
        rels.push(Word::power_of(i, k as i64));
    }
    if !b.infinite {
        let prod: Word = (0..t).map(Letter::pos).collect();
        let r = surface_relator(b.orientable, b.genus).relabel(|g| Some(g + t));
        let rel = prod.concat(&r).pow(b.last as i64);
        if !rel.is_empty() {
            rels.push(rel);
        }
    }
    Ok(Presentation::from_parts_unchecked(n, rels))
}
