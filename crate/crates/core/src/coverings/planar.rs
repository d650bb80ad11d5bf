//! Spherical, Euclidean and hyperbolic principal groups.

use std::fmt;

use num_rational::Rational64;

use super::{BranchData, CoveringError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Spherical => "spherical",
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarClass {
    pub geometry: Geometry,
    /// Orbifold Euler characteristic; its sign decides the geometry.
    pub characteristic: Rational64,
    /// Name of the classical group, when the data is one of the listed shapes.
    pub name: Option<String>,
}

/// `χ(surface) - Σ (1 - 1/k_i)`, with an infinite last order contributing 1.
pub fn orbifold_characteristic(b: &BranchData) -> Result<Rational64, CoveringError> {
    b.validate()?;
    let g = b.genus as i64;
    let mut chi = Rational64::from_integer(if b.orientable { 2 - 2 * g } else { 2 - g });
    let one = Rational64::from_integer(1);
    for &k in &b.orders {
        chi -= one - Rational64::new(1, k as i64);
    }
    if b.infinite {
        chi -= one;
    } else {
        chi -= one - Rational64::new(1, b.last as i64);
    }
    Ok(chi)
}

fn name_of(b: &BranchData) -> Option<String> {
    if b.infinite {
        return None;
    }
    let mut ks: Vec<u64> = b.orders.iter().copied().chain(Some(b.last)).filter(|&k| k > 1).collect();
    ks.sort_unstable();
    if !b.orientable {
        return None;
    }
    if b.genus == 1 {
        return ks.is_empty().then(|| "translations (torus)".to_string());
    }
    if b.genus != 0 {
        return None;
    }
    Some(match ks.as_slice() {
        [] => "trivial".to_string(),
        [n, m] if n == m => format!("cyclic of order {}", n),
        [2, 2, n] => format!("dihedral of order {}", 2 * n),
        [2, 3, 3] => "tetrahedral".to_string(),
        [2, 3, 4] => "octahedral".to_string(),
        [2, 3, 5] => "icosahedral".to_string(),
        [2, 3, 6] => "(2,3,6) triangle".to_string(),
        [2, 4, 4] => "(2,4,4) triangle".to_string(),
        [3, 3, 3] => "(3,3,3) triangle".to_string(),
        [2, 2, 2, 2] => "(2,2,2,2) quadrangle".to_string(),
        _ => return None,
    })
}

pub fn classify_planar_group(b: &BranchData) -> Result<PlanarClass, CoveringError> {
    let chi = orbifold_characteristic(b)?;
    let zero = Rational64::from_integer(0);
    let geometry = if chi > zero {
        Geometry::Spherical
    } else if chi == zero {
        Geometry::Euclidean
    } else {
        Geometry::Hyperbolic
    };
    Ok(PlanarClass {
        geometry,
        characteristic: chi,
        name: name_of(b),
    })
}

/// `S^p = T^q = (ST)^r = 1`.
pub fn classify_triangle(p: u64, q: u64, r: u64) -> Result<PlanarClass, CoveringError> {
    classify_planar_group(&BranchData::triangle(p, q, r))
}
