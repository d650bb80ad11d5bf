//! Constructive combinatorial topology and combinatorial group theory.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: free words, free and cyclic reduction, conjugacy, and normal
//!   forms in free products of cyclic groups and torus-knot-type groups.
//! * [`presentations`]: finitely presented groups, witnessed Tietze moves,
//!   Nielsen moves, a bounded simplifier and canonical surface presentations.
//! * [`matrices`]: Smith normal form over the integers, elementary divisors
//!   from minors, and elementary divisors of Laurent-polynomial matrices.
//! * [`subgroups`]: coset tables, Schreier transversals, Reidemeister-Schreier
//!   rewriting, congruence subgroups of the modular group and the operator
//!   polynomial of a one-relator commutator subgroup.
//! * [`complexes`]: 1-complexes (multigraphs with loops), Euler trails,
//!   spanning trees, fundamental groups, permutation-voltage coverings,
//!   Cayley diagrams and 2-factorizations.
//! * [`surfaces`]: 2-complexes and closed surfaces: manifold validation,
//!   duality, orientability, classification, fundamental groups, homology and
//!   intersection numbers.
//! * [`coverings`]: branched coverings of surfaces, branching numbers of
//!   subgroups, the planar-group trichotomy and two word-problem solvers for
//!   surface groups.
//! * [`cli`]: the text front end used by the `reidemeister` binary.

pub mod cli;
pub mod complexes;
pub mod coverings;
pub mod matrices;
pub mod perm;
pub mod presentations;
pub mod subgroups;
pub mod surfaces;
pub mod words;

pub use matrices::{AbelianInvariants, IntMatrix, LaurentMatrix, LaurentPoly};
pub use perm::Perm;
pub use presentations::Presentation;
pub use words::{CyclicWord, Letter, Word};
