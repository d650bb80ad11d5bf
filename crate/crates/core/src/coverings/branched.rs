//! Surface coverings from permutation voltages, with branching over faces.

use super::CoveringError;
use crate::complexes::Graph1;
use crate::perm::Perm;
use crate::subgroups::CosetTable;
use crate::surfaces::{characteristic, validate_manifold, SurfaceComplex};
use crate::words::{Letter, Word};

const MAX_SHEETS: usize = 10_000;

/// Segment `s` carries `perms[s]`: leaving its tail on sheet `j` it arrives
/// at its head on sheet `perms[s](j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCoverSpec {
    pub base: SurfaceComplex,
    pub sheets: usize,
    pub perms: Vec<Perm>,
}

impl SurfaceCoverSpec {
    pub fn new(base: SurfaceComplex, sheets: usize, perms: Vec<Perm>) -> Result<Self, CoveringError> {
        if sheets == 0 || sheets > MAX_SHEETS {
            return Err(CoveringError::SheetGuard(sheets));
        }
        if perms.len() != base.n_segments() {
            return Err(CoveringError::VoltageCount {
                found: perms.len(),
                expected: base.n_segments(),
            });
        }
        for (s, p) in perms.iter().enumerate() {
            if p.degree() != sheets {
                return Err(CoveringError::VoltageDegree {
                    segment: s,
                    found: p.degree(),
                    expected: sheets,
                });
            }
        }
        Ok(SurfaceCoverSpec { base, sheets, perms })
    }

    /// Every voltage is the identity except the listed ones.
    pub fn with_assignments(base: SurfaceComplex, sheets: usize, assign: &[(usize, Perm)]) -> Result<Self, CoveringError> {
        let mut perms = vec![Perm::identity(sheets); base.n_segments()];
        for (s, p) in assign {
            if *s >= perms.len() {
                return Err(CoveringError::VoltageCount {
                    found: *s + 1,
                    expected: perms.len(),
                });
            }
            perms[*s] = p.clone();
        }
        SurfaceCoverSpec::new(base, sheets, perms)
    }

    pub fn letter(&self, l: Letter) -> Perm {
        let p = &self.perms[l.generator()];
        if l.is_inverse() {
            p.inverse()
        } else {
            p.clone()
        }
    }

    /// Voltage product along a word, first letter applied first.
    pub fn along(&self, w: &Word) -> Perm {
        w.iter().fold(Perm::identity(self.sheets), |acc, &l| acc.then(&self.letter(l)))
    }

    /// Lift of `w` starting on `sheet`, over cover segments `s * k + j`.
    pub fn lift(&self, w: &Word, sheet: usize) -> (Word, usize) {
        let k = self.sheets;
        let mut j = sheet;
        let mut out = Vec::with_capacity(w.len());
        for &l in w {
            let s = l.generator();
            if l.is_inverse() {
                j = self.perms[s].inverse().apply(j);
                out.push(Letter::neg(s * k + j));
            } else {
                out.push(Letter::pos(s * k + j));
                j = self.perms[s].apply(j);
            }
        }
        (Word::from_letters(out), j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub degree: usize,
    /// Per base face, `(cycle length, branching number)` for each cover face
    /// above it.
    pub faces: Vec<Vec<(usize, usize)>>,
    pub components: usize,
}

impl BranchReport {
    pub fn total_branching(&self) -> usize {
        self.faces.iter().flatten().map(|&(_, b)| b).sum()
    }

    pub fn is_unbranched(&self) -> bool {
        self.total_branching() == 0
    }
}

pub fn build_surface_cover(spec: &SurfaceCoverSpec) -> Result<(SurfaceComplex, BranchReport), CoveringError> {
    let base = &spec.base;
    validate_manifold(base)?;
    let k = spec.sheets;
    let g = base.graph();
    let mut segs = Vec::with_capacity(g.n_segments() * k);
    for (s, &(a, b)) in g.segments().iter().enumerate() {
        for j in 0..k {
            segs.push((a * k + j, b * k + spec.perms[s].apply(j)));
        }
    }
    let graph = Graph1::new(g.n_points() * k, segs).map_err(crate::surfaces::SurfaceError::from)?;
    let mut faces = Vec::new();
    let mut report = Vec::with_capacity(base.n_faces());
    for r in base.faces() {
        let pi = spec.along(r);
        let mut cycles = Vec::new();
        for cycle in pi.cycles() {
            let l = cycle.len();
            let (lift, end) = spec.lift(&r.pow(l as i64), cycle[0]);
            debug_assert_eq!(end, cycle[0]);
            faces.push(lift);
            cycles.push((l, l - 1));
        }
        report.push(cycles);
    }
    let components = count_components(&graph);
    let cover = SurfaceComplex::new(graph, faces)?;
    if components == 1 {
        validate_manifold(&cover)?;
    }
    Ok((
        cover,
        BranchReport {
            degree: k,
            faces: report,
            components,
        },
    ))
}

fn count_components(g: &Graph1) -> usize {
    let mut seen = vec![false; g.n_points()];
    let mut count = 0;
    for p in 0..g.n_points() {
        if seen[p] {
            continue;
        }
        count += 1;
        for (q, inside) in g.component(p).into_iter().enumerate() {
            seen[q] |= inside;
        }
    }
    count
}

/// Every face's cycle lengths sum to the degree.
pub fn verify_order_formula(report: &BranchReport) -> bool {
    report
        .faces
        .iter()
        .all(|f| f.iter().map(|&(l, _)| l).sum::<usize>() == report.degree && f.iter().all(|&(l, b)| l == b + 1))
}

/// Direct characteristic of the cover against `k c_base + total branching`.
pub fn riemann_hurwitz_check(base: &SurfaceComplex, cover: &SurfaceComplex, report: &BranchReport) -> bool {
    let expected = report.degree as i64 * characteristic(base) + report.total_branching() as i64;
    characteristic(cover) == expected
}

/// Whether each face's voltage product is the identity, i.e. whether the
/// cover is unbranched over it.
pub fn unbranched_faces(spec: &SurfaceCoverSpec) -> Vec<bool> {
    spec.base.faces().iter().map(|r| spec.along(r).is_identity()).collect()
}

/// `(l, k/l - 1)` for each cycle of the relator's coset permutation.
pub fn branching_orders_of_subgroup(t: &CosetTable, relator: &Word, k: u64) -> Result<Vec<(u64, u64)>, CoveringError> {
    if k == 0 {
        return Err(CoveringError::ZeroExponent);
    }
    let pi = t.word_permutation(relator);
    if !pi.pow(k as i64).is_identity() {
        return Err(CoveringError::NotPeriodic(k));
    }
    Ok(pi
        .cycles()
        .iter()
        .map(|c| {
            let l = c.len() as u64;
            (l, k / l - 1)
        })
        .collect())
}
