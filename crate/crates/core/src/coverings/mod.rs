//! Branched coverings of surfaces, branching numbers of subgroups, the
//! planar-group trichotomy and word problems in surface groups.

mod branched;
mod planar;
mod word_problem;

pub use branched::{
    branching_orders_of_subgroup, build_surface_cover, riemann_hurwitz_check, unbranched_faces, verify_order_formula,
    BranchReport, SurfaceCoverSpec,
};
pub use planar::{classify_planar_group, classify_triangle, orbifold_characteristic, Geometry, PlanarClass};
pub use word_problem::{
    cyclic_cover_is_identity, dehn_is_identity, dehn_reduce, non_orientable_is_identity, torus_is_identity,
};

pub use crate::presentations::BranchData;

use thiserror::Error;

use crate::perm::PermError;
use crate::presentations::StandardError;
use crate::surfaces::SurfaceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoveringError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Branch(#[from] StandardError),
    #[error("sheet count {0} is outside 1..=10000")]
    SheetGuard(usize),
    #[error("{found} voltages given for {expected} segments")]
    VoltageCount { found: usize, expected: usize },
    #[error("voltage of segment {segment} has degree {found}, expected {expected}")]
    VoltageDegree { segment: usize, found: usize, expected: usize },
    #[error("the relator to the power {0} does not fix every coset")]
    NotPeriodic(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("genus {0} is below the solver minimum of {1}")]
    GenusTooSmall(usize, usize),
    #[error("letter on generator {0} is outside the surface alphabet")]
    ForeignGenerator(usize),
}
