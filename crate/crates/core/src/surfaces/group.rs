//! Fundamental groups, homology vectors and the intersection form.

use super::{SurfaceComplex, SurfaceError};
use crate::complexes::{fundamental_group_basis, spanning_tree, Dart};
use crate::presentations::Presentation;
use crate::words::Word;

/// Generators are the co-tree loops at `base`; each face contributes its
/// boundary, carried to `base` along the tree.
pub fn fundamental_group(c: &SurfaceComplex, base: usize) -> Result<Presentation, SurfaceError> {
    let tree = spanning_tree(c.graph())?;
    fundamental_group_with_tree(c, base, &tree)
}

pub fn fundamental_group_with_tree(c: &SurfaceComplex, base: usize, tree: &[usize]) -> Result<Presentation, SurfaceError> {
    let g = c.graph();
    let basis = fundamental_group_basis(g, base, tree)?;
    let mut rels = Vec::with_capacity(c.n_faces());
    for w in c.faces() {
        let start = g.tail(Dart::from_letter(w[0]));
        let mut path = basis.tree_path(start).clone();
        path.darts.extend(w.iter().map(|&l| Dart::from_letter(l)));
        path.darts.extend(basis.tree_path(start).inverse(g).darts);
        rels.push(basis.express(g, &path)?);
    }
    Ok(Presentation::new(basis.loops.len(), rels).expect("relators use loop generators"))
}

/// Exponent sums of `w` over `n` generators.
pub fn homology_class(w: &Word, n: usize) -> Vec<i64> {
    w.exponent_sums(n)
}

/// `Σ (a_{1i} b_{2i} - a_{2i} b_{1i})` for vectors `(a_1, b_1, a_2, b_2, ..)`.
pub fn intersection_number(v1: &[i64], v2: &[i64]) -> Result<i64, SurfaceError> {
    if v1.len() != v2.len() || !v1.len().is_multiple_of(2) {
        return Err(SurfaceError::LengthMismatch(v1.len(), v2.len()));
    }
    Ok(v1
        .chunks(2)
        .zip(v2.chunks(2))
        .map(|(x, y)| x[0] * y[1] - y[0] * x[1])
        .sum())
}
