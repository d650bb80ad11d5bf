//! Elementary divisors straight from the definition: `d_k = δ_k / δ_{k-1}`
//! with `δ_k` the gcd of all `k × k` minors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::int_matrix::bareiss;
use super::IntMatrix;

/// Largest allowed `C(m, k) · C(n, k)` for any single `k`.
pub const MINOR_GUARD: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{count} minors of size {k} exceed the enumeration guard")]
pub struct MinorGuardExceeded {
    pub k: usize,
    pub count: u128,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Calls `f` on every increasing `k`-subset of `0..n`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn check_guard(rows: usize, cols: usize) -> Result<(), MinorGuardExceeded> {
    for k in 1..=rows.min(cols) {
        let count = binomial(rows, k) * binomial(cols, k);
        if count > MINOR_GUARD {
            return Err(MinorGuardExceeded { k, count });
        }
    }
    Ok(())
}

/// Returns the nonzero elementary divisors and the rank.
pub fn elementary_divisors_via_minors(
    m: &IntMatrix,
) -> Result<(Vec<BigInt>, usize), MinorGuardExceeded> {
    check_guard(m.rows(), m.cols())?;
    let mut divisors = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for_each_subset(m.rows(), k, |rs| {
            for_each_subset(m.cols(), k, |cs| {
                if g.is_one() {
                    return;
                }
                let d = bareiss(k, |i, j| m.get(rs[i], cs[j]).clone());
                g = g.gcd(&d);
            });
        });
        if g.is_zero() {
            break;
        }
        divisors.push(&g / &prev);
        prev = g;
    }
    let rank = divisors.len();
    Ok((divisors, rank))
}
