//! Smith normal form by elementary row and column moves.
//!
//! Pivot policy: the nonzero entry of least absolute value in the remaining
//! block, scanning rows first, earliest index on ties.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// The nonzero diagonal entries `d_1 | d_2 | ..`, all positive.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    /// `left · m · right` is the diagonal matrix.
    pub left: IntMatrix,
    pub right: IntMatrix,
}

fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some(_) = min_pivot(&a, t) else { break };
        loop {
            let (pi, pj) = min_pivot(&a, t).expect("block is nonzero");
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a.get(i, t) / &p;
                if !q.is_zero() {
                    a.add_row(i, t, &-&q);
                    left.add_row(i, t, &-&q);
                }
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a.get(t, j) / &p;
                if !q.is_zero() {
                    a.add_col(j, t, &-&q);
                    right.add_col(j, t, &-&q);
                }
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p))
            });
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..t).map(|i| a.get(i, i).clone()).collect();
    SmithForm {
        rank: diagonal.len(),
        diagonal,
        left,
        right,
    }
}
