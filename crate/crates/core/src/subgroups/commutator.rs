//! The commutator subgroup of a two-generator one-relator group with
//! infinite cyclic abelianization.
//!
//! After a change of generators `(S, K)` in which `K` dies in the
//! abelianization, the relator reads `Π S^{r_i} K^{ε_i} S^{-r_i}` and the
//! commutator subgroup is generated by the shifts `K_r = S^r K S^{-r}` with
//! the single operator relation `K^{f(x)} = 1`, `f(x) = Σ ε_i x^{r_i}`.

use num_bigint::BigInt;

use super::SubgroupError;
use crate::matrices::LaurentPoly;
use crate::presentations::{NielsenMove, Presentation};
use crate::words::Word;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn check_shape(p: &Presentation) -> Result<&Word, SubgroupError> {
    if p.n_generators() != 2 || p.relators().len() != 1 {
        return Err(SubgroupError::NotOneRelator);
    }
    Ok(p.relator(0))
}

/// Map `φ` to `Z` killing the relator: `φ(a) = -s_2`, `φ(b) = s_1` for
/// exponent sums `(s_1, s_2)`; `(1, 0)` when both sums vanish.
pub fn exponent_map(p: &Presentation) -> Result<[i64; 2], SubgroupError> {
    let r = check_shape(p)?;
    let (s1, s2) = (r.exponent_sum(0), r.exponent_sum(1));
    match gcd(s1, s2) {
        0 => Ok([1, 0]),
        1 => Ok([-s2, s1]),
        g => Err(SubgroupError::NotInfiniteCyclic(g)),
    }
}

/// Runs Euclid on the exponent sums with Nielsen moves, then reads off
/// `f(x)` in canonical form.
pub fn commutator_operator_polynomial(p: &Presentation) -> Result<LaurentPoly, SubgroupError> {
    exponent_map(p)?;
    let mut r = p.relator(0).free_reduce();
    loop {
        let (s1, s2) = (r.exponent_sum(0), r.exponent_sum(1));
        if s1 == 0 || s2 == 0 {
            break;
        }
        // S_a ↦ S_a S_b^{-q} lowers the exponent sum of S_b by q·s_a
        let (a, b, q) = if s1.abs() >= s2.abs() {
            (1, 0, s1 / s2)
        } else {
            (0, 1, s2 / s1)
        };
        let mv = NielsenMove::Replace {
            a,
            b,
            inverse: q > 0,
        };
        for _ in 0..q.abs() {
            r = mv.apply_word(&r, 2).expect("valid move");
        }
    }
    // S is the generator with exponent sum 0
    let s = if r.exponent_sum(0) == 0 { 0 } else { 1 };
    let mut shift = 0i64;
    let mut f = LaurentPoly::zero();
    for l in &r {
        if l.generator() == s {
            shift += l.sign();
        } else {
            f.add_term(shift, BigInt::from(l.sign()));
        }
    }
    Ok(f.canonical())
}

/// Abelianized rewriting of the relator in the kernel of `φ`: one entry per
/// generator, `Σ ±x^k` over its occurrences, `k` the coset (shift) at which
/// the occurrence is read.
pub fn commutator_relation_row(p: &Presentation) -> Result<Vec<LaurentPoly>, SubgroupError> {
    let phi = exponent_map(p)?;
    let mut row = vec![LaurentPoly::zero(), LaurentPoly::zero()];
    let mut k = 0i64;
    for l in p.relator(0) {
        let g = l.generator();
        if l.is_inverse() {
            k -= phi[g];
            row[g].add_term(k, BigInt::from(-1));
        } else {
            row[g].add_term(k, BigInt::from(1));
            k += phi[g];
        }
    }
    Ok(row)
}
