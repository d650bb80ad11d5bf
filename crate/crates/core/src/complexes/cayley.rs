//! Group diagrams of permutation groups.

use std::collections::HashMap;

use super::{Graph1, GraphError};
use crate::perm::{closure, Perm};
use crate::words::Word;

pub const CAYLEY_GUARD: usize = 100_000;

/// Point `x` is `elements[x]`; segment `x * n_gens + i` runs from `x` to
/// `elements[x] · gens[i]` and carries label `i`.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: Graph1,
    pub elements: Vec<Perm>,
    pub labels: Vec<usize>,
    index: HashMap<Perm, usize>,
    gens: Vec<Perm>,
}

pub fn cayley_graph(gens: &[Perm]) -> Result<CayleyGraph, GraphError> {
    let degree = gens.first().map_or(0, Perm::degree);
    for g in gens {
        if g.degree() != degree {
            return Err(crate::perm::PermError::DegreeMismatch(g.degree(), degree).into());
        }
    }
    let elements = closure(gens, degree, CAYLEY_GUARD).ok_or(GraphError::ClosureGuard(CAYLEY_GUARD))?;
    let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut segs = Vec::with_capacity(elements.len() * gens.len());
    let mut labels = Vec::with_capacity(segs.capacity());
    for (x, e) in elements.iter().enumerate() {
        for (i, g) in gens.iter().enumerate() {
            segs.push((x, index[&e.then(g)]));
            labels.push(i);
        }
    }
    Ok(CayleyGraph {
        graph: Graph1::new(elements.len(), segs)?,
        elements,
        labels,
        index,
        gens: gens.to_vec(),
    })
}

impl CayleyGraph {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn point_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Endpoint of the path spelling `w` (in the generators) from `start`.
    pub fn trace(&self, start: usize, w: &Word) -> usize {
        w.iter().fold(start, |x, l| {
            let g = &self.gens[l.generator()];
            let step = if l.is_inverse() { g.inverse() } else { g.clone() };
            self.index[&self.elements[x].then(&step)]
        })
    }

    /// Left multiplication by `elements[h]`, as a point permutation.
    pub fn left_translation(&self, h: usize) -> Perm {
        let images = self
            .elements
            .iter()
            .map(|e| self.index[&self.elements[h].then(e)])
            .collect();
        Perm::from_images(images).expect("left translation is a bijection")
    }
}
