//! Coverings of a 1-complex from permutation voltages.
//!
//! Sheets are `0..k`. Traversing segment `s` forwards from sheet `j` lands on
//! sheet `σ_s(j)`; backwards uses `σ_s⁻¹`.

use super::{is_spanning_tree, Dart, Graph1, GraphError, GraphPath};
use crate::perm::{closure, Perm};

/// Largest supported sheet count.
pub const MAX_SHEETS: usize = 10_000;
/// Largest voltage group enumerated by [`is_regular_cover`].
pub const REGULARITY_GUARD: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Voltage {
    pub sheets: usize,
    /// One permutation per segment; tree segments carry the identity.
    pub perms: Vec<Perm>,
}

impl Voltage {
    pub fn identity(g: &Graph1, sheets: usize) -> Self {
        Voltage {
            sheets,
            perms: vec![Perm::identity(sheets); g.n_segments()],
        }
    }

    /// Identity everywhere except the listed segments.
    pub fn from_assignments(g: &Graph1, sheets: usize, assign: &[(usize, Perm)]) -> Result<Self, GraphError> {
        let mut v = Voltage::identity(g, sheets);
        for (s, p) in assign {
            if *s >= g.n_segments() {
                return Err(GraphError::NoSuchSegment(*s));
            }
            v.perms[*s] = p.clone();
        }
        Ok(v)
    }

    pub fn dart(&self, d: Dart) -> Perm {
        if d.rev {
            self.perms[d.seg].inverse()
        } else {
            self.perms[d.seg].clone()
        }
    }

    /// Product of voltages along a path, first dart applied first.
    pub fn along(&self, path: &GraphPath) -> Perm {
        path.darts
            .iter()
            .fold(Perm::identity(self.sheets), |acc, &d| acc.then(&self.dart(d)))
    }

    fn validate(&self, g: &Graph1, tree: &[usize]) -> Result<(), GraphError> {
        if self.sheets == 0 || self.sheets > MAX_SHEETS {
            return Err(GraphError::SheetGuard(self.sheets));
        }
        if self.perms.len() != g.n_segments() {
            return Err(GraphError::NoSuchSegment(self.perms.len()));
        }
        for (s, p) in self.perms.iter().enumerate() {
            if p.degree() != self.sheets {
                return Err(GraphError::VoltageDegree {
                    segment: s,
                    found: p.degree(),
                    expected: self.sheets,
                });
            }
        }
        if !is_spanning_tree(g, tree) {
            return Err(GraphError::InvalidTree);
        }
        for &s in tree {
            if !self.perms[s].is_identity() {
                return Err(GraphError::TreeVoltage(s));
            }
        }
        Ok(())
    }
}

/// Cover point `p * k + j` lies over base point `p` on sheet `j`; likewise
/// for segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProjection {
    pub sheets: usize,
}

impl CoverProjection {
    pub fn point(&self, cover_point: usize) -> (usize, usize) {
        (cover_point / self.sheets, cover_point % self.sheets)
    }

    pub fn segment(&self, cover_seg: usize) -> (usize, usize) {
        (cover_seg / self.sheets, cover_seg % self.sheets)
    }

    pub fn lift_point(&self, p: usize, sheet: usize) -> usize {
        p * self.sheets + sheet
    }

    /// Lift of a base path starting on `sheet`.
    pub fn lift_path(&self, base: &Graph1, v: &Voltage, path: &GraphPath, sheet: usize) -> GraphPath {
        let mut j = sheet;
        let mut darts = Vec::new();
        for &d in &path.darts {
            if d.rev {
                j = v.perms[d.seg].inverse().apply(j);
                darts.push(Dart::back(d.seg * self.sheets + j));
            } else {
                darts.push(Dart::fwd(d.seg * self.sheets + j));
                j = v.perms[d.seg].apply(j);
            }
        }
        let _ = base;
        GraphPath {
            start: self.lift_point(path.start, sheet),
            darts,
        }
    }
}

pub fn build_cover(g: &Graph1, tree: &[usize], v: &Voltage) -> Result<(Graph1, CoverProjection), GraphError> {
    v.validate(g, tree)?;
    let k = v.sheets;
    let mut segs = Vec::with_capacity(g.n_segments() * k);
    for (s, &(a, b)) in g.segments().iter().enumerate() {
        for j in 0..k {
            segs.push((a * k + j, b * k + v.perms[s].apply(j)));
        }
    }
    let cover = Graph1::new(g.n_points() * k, segs)?;
    Ok((cover, CoverProjection { sheets: k }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    Irregular,
    /// The voltage group is larger than the enumeration guard.
    Undecided,
}

/// A connected cover is regular iff every element of the voltage group fixes
/// either no sheet or every sheet.
pub fn is_regular_cover(g: &Graph1, tree: &[usize], v: &Voltage) -> Result<Regularity, GraphError> {
    v.validate(g, tree)?;
    let Some(group) = closure(&v.perms, v.sheets, REGULARITY_GUARD) else {
        return Ok(Regularity::Undecided);
    };
    for h in &group {
        let fixed = h.fixed_points().count();
        if fixed != 0 && fixed != v.sheets {
            return Ok(Regularity::Irregular);
        }
    }
    Ok(Regularity::Regular)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    fn wedge() -> Graph1 {
        Graph1::new(1, vec![(0, 0), (0, 0)]).unwrap()
    }

    #[test]
    fn identity_voltage_gives_copies() {
        let g = Graph1::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let (c, _) = build_cover(&g, &[0], &Voltage::identity(&g, 3)).unwrap();
        assert_eq!((c.n_points(), c.n_segments()), (6, 6));
        assert!(!c.is_connected());
    }

    #[test]
    fn cycle_cover() {
        let g = Graph1::new(1, vec![(0, 0)]).unwrap();
        let v = Voltage::from_assignments(&g, 4, &[(0, perm(4, "(0 1 2 3)"))]).unwrap();
        let (c, _) = build_cover(&g, &[], &v).unwrap();
        assert!(c.is_connected());
        assert!((0..4).all(|p| c.order(p) == 2));
    }

    #[test]
    fn path_lifting() {
        let g = wedge();
        let v = Voltage::from_assignments(&g, 3, &[(0, perm(3, "(0 1)")), (1, perm(3, "(1 2)"))]).unwrap();
        let (c, proj) = build_cover(&g, &[], &v).unwrap();
        assert!(c.is_connected());
        let path = g.path_from_word(0, &"a b A".parse().unwrap()).unwrap();
        for j in 0..3 {
            let lift = proj.lift_path(&g, &v, &path, j);
            c.validate_path(&lift).unwrap();
            assert_eq!(lift.is_closed(&c), v.along(&path).apply(j) == j);
        }
    }

    #[test]
    fn regularity() {
        let g = wedge();
        let cay = Voltage::from_assignments(&g, 3, &[(0, perm(3, "(0 1 2)"))]).unwrap();
        assert_eq!(is_regular_cover(&g, &[], &cay).unwrap(), Regularity::Regular);
        let v = Voltage::from_assignments(&g, 3, &[(0, perm(3, "(0 1)")), (1, perm(3, "(0 1 2)"))]).unwrap();
        assert_eq!(is_regular_cover(&g, &[], &v).unwrap(), Regularity::Irregular);
        let stab = Voltage::from_assignments(&g, 3, &[(0, perm(3, "(0 1)"))]).unwrap();
        assert_eq!(is_regular_cover(&g, &[], &stab).unwrap(), Regularity::Irregular);
        let two = Voltage::from_assignments(&g, 2, &[(0, perm(2, "(0 1)"))]).unwrap();
        assert_eq!(is_regular_cover(&g, &[], &two).unwrap(), Regularity::Regular);
    }

    #[test]
    fn tree_voltage_rejected() {
        let g = Graph1::new(2, vec![(0, 1)]).unwrap();
        let v = Voltage::from_assignments(&g, 2, &[(0, perm(2, "(0 1)"))]).unwrap();
        assert_eq!(build_cover(&g, &[0], &v).unwrap_err(), GraphError::TreeVoltage(0));
    }
}
