//! Integer and Laurent-polynomial matrices and their elementary divisors.

mod int_matrix;
mod laurent;
mod laurent_matrix;
mod minors;
mod snf;

pub use int_matrix::{IntMatrix, MatrixError};
pub use laurent::{content, laurent_gcd, primitive_part, LaurentError, LaurentPoly};
pub use laurent_matrix::{laurent_elementary_divisors, LaurentMatrix};
pub use minors::{elementary_divisors_via_minors, MinorGuardExceeded, MINOR_GUARD};
pub use snf::{smith_normal_form, SmithForm};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::presentations::Presentation;

/// Torsion coefficients `d_k > 1` (each dividing the next) and the free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub betti: usize,
}

impl AbelianInvariants {
    pub fn from_divisors(divisors: &[BigInt], n_generators: usize, rank: usize) -> Self {
        AbelianInvariants {
            torsion: divisors.iter().filter(|d| !d.is_one()).cloned().collect(),
            betti: n_generators - rank,
        }
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.betti == 0
    }
}

/// `Z^betti + Z/d_1 + ..`, or `0` for the trivial group.
impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti == 1 {
            parts.push("Z".to_string());
        } else if self.betti > 1 {
            parts.push(format!("Z^{}", self.betti));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Abelianization of `p` read off the Smith form of its exponent-sum matrix.
pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let m = p.abelianized_matrix();
    let s = smith_normal_form(&m);
    AbelianInvariants::from_divisors(&s.diagonal, p.n_generators(), s.rank)
}
