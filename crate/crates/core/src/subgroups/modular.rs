//! Congruence subgroups of the modular group `⟨S_1, S_2 | S_1³, S_2²⟩`.
//!
//! With `S_1 = T S` and `S_2 = S`, the `p + 1` cosets are `E, G_0, .., G_{p-1}`
//! (indices `0, 1, .., p`). `T` fixes `E` and sends `G_k` to `G_{k+1}`; `S`
//! swaps `E` with `G_0` and `G_k` with `G_{k*}` where `k k* ≡ -1 (mod p)`.

use super::{coset_table_from_permutations, reidemeister_schreier, CosetTable, SubgroupError};
use crate::perm::Perm;
use crate::presentations::{power_relator_orders, simplify, Presentation};

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn modular_group() -> Presentation {
    Presentation::parse(2, &["a a a", "b b"]).expect("static presentation")
}

pub fn modular_congruence_table(p: u64) -> Result<CosetTable, SubgroupError> {
    if !is_prime(p) {
        return Err(SubgroupError::NotPrime(p));
    }
    let n = p as usize + 1;
    let g = |k: u64| (k % p) as usize + 1;
    let mut t = vec![0; n];
    let mut s = vec![0; n];
    t[0] = 0;
    s[0] = g(0);
    s[g(0)] = 0;
    for k in 0..p {
        t[g(k)] = g(k + 1);
        if k != 0 {
            // k* = -k⁻¹ mod p
            let inv = (1..p).find(|j| (k * j) % p == 1).expect("p is prime");
            s[g(k)] = g(p - inv);
        }
    }
    let t = Perm::from_images(t)?;
    let s = Perm::from_images(s)?;
    coset_table_from_permutations(&modular_group(), vec![t.then(&s), s])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub p: u64,
    pub index: usize,
    pub n_generators: usize,
    /// Number of relators `U²` after simplification.
    pub order2: usize,
    /// Number of relators `U³` after simplification.
    pub order3: usize,
    /// No relators survive simplification.
    pub free: bool,
    pub presentation: Presentation,
}

pub fn congruence_subgroup_report(p: u64) -> Result<CongruenceReport, SubgroupError> {
    let t = modular_congruence_table(p)?;
    let rs = reidemeister_schreier(&modular_group(), &t, None);
    let s = simplify(rs.presentation()).presentation;
    let orders = power_relator_orders(&s);
    Ok(CongruenceReport {
        p,
        index: t.n_cosets(),
        n_generators: s.n_generators(),
        order2: orders.iter().filter(|&&k| k == 2).count(),
        order3: orders.iter().filter(|&&k| k == 3).count(),
        free: s.relators().is_empty(),
        presentation: s,
    })
}
