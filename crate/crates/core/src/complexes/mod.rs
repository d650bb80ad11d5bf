//! Line segment complexes: finite multigraphs with loops, each segment pair
//! stored once with its inverse implied.

mod cayley;
mod cover;
mod euler;
mod format;
mod petersen;

pub use cayley::{cayley_graph, CayleyGraph};
pub use cover::{build_cover, is_regular_cover, CoverProjection, Regularity, Voltage};
pub use euler::euler_trails;
pub use format::{parse_permutation_list, GraphNames};
pub use petersen::petersen_2_factorization;

use std::collections::VecDeque;

use thiserror::Error;

use crate::perm::PermError;
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("the complex is not connected")]
    Disconnected,
    #[error("point {0} does not exist")]
    NoSuchPoint(usize),
    #[error("segment {0} does not exist")]
    NoSuchSegment(usize),
    #[error("path breaks at step {0}")]
    BrokenPath(usize),
    #[error("segment set is not a spanning tree")]
    InvalidTree,
    #[error("tree segment {0} carries a non-identity voltage")]
    TreeVoltage(usize),
    #[error("voltage on segment {segment} has degree {found}, expected {expected}")]
    VoltageDegree {
        segment: usize,
        found: usize,
        expected: usize,
    },
    #[error("sheet count {0} is outside 1..=10000")]
    SheetGuard(usize),
    #[error("point {point} has order {order}, expected {expected}")]
    NotRegular {
        point: usize,
        order: usize,
        expected: usize,
    },
    #[error("complexes of odd degree {0} have no 2-factorization")]
    OddDegree(usize),
    #[error("group closure exceeds {0} elements")]
    ClosureGuard(usize),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A segment traversed forwards or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub seg: usize,
    pub rev: bool,
}

impl Dart {
    pub fn fwd(seg: usize) -> Self {
        Dart { seg, rev: false }
    }

    pub fn back(seg: usize) -> Self {
        Dart { seg, rev: true }
    }

    pub fn inverse(self) -> Self {
        Dart {
            seg: self.seg,
            rev: !self.rev,
        }
    }

    /// As a letter: segment `i` is generator `i`.
    pub fn letter(self) -> Letter {
        Letter::new(self.seg, self.rev)
    }

    pub fn from_letter(l: Letter) -> Self {
        Dart {
            seg: l.generator(),
            rev: l.is_inverse(),
        }
    }
}

/// A chain of darts from `start`. Empty paths sit at `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPath {
    pub start: usize,
    pub darts: Vec<Dart>,
}

impl GraphPath {
    pub fn end(&self, g: &Graph1) -> usize {
        self.darts.last().map_or(self.start, |&d| g.head(d))
    }

    pub fn is_closed(&self, g: &Graph1) -> bool {
        self.end(g) == self.start
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Segment word: segment `i` is generator `i`.
    pub fn word(&self) -> Word {
        self.darts.iter().map(|d| d.letter()).collect()
    }

    pub fn inverse(&self, g: &Graph1) -> GraphPath {
        GraphPath {
            start: self.end(g),
            darts: self.darts.iter().rev().map(|d| d.inverse()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph1 {
    n_points: usize,
    segs: Vec<(usize, usize)>,
}

impl Graph1 {
    pub fn new(n_points: usize, segs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(a, b) in &segs {
            for p in [a, b] {
                if p >= n_points {
                    return Err(GraphError::NoSuchPoint(p));
                }
            }
        }
        Ok(Graph1 { n_points, segs })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn n_segments(&self) -> usize {
        self.segs.len()
    }

    pub fn segments(&self) -> &[(usize, usize)] {
        &self.segs
    }

    pub fn endpoints(&self, s: usize) -> (usize, usize) {
        self.segs[s]
    }

    pub fn tail(&self, d: Dart) -> usize {
        let (a, b) = self.segs[d.seg];
        if d.rev {
            b
        } else {
            a
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.inverse())
    }

    /// Darts leaving each point; a loop contributes both of its darts.
    pub fn darts_at(&self) -> Vec<Vec<Dart>> {
        let mut out = vec![Vec::new(); self.n_points];
        for (s, &(a, b)) in self.segs.iter().enumerate() {
            out[a].push(Dart::fwd(s));
            out[b].push(Dart::back(s));
        }
        out
    }

    /// Number of darts leaving `p`.
    pub fn order(&self, p: usize) -> usize {
        self.segs
            .iter()
            .map(|&(a, b)| (a == p) as usize + (b == p) as usize)
            .sum()
    }

    /// Points reachable from `p`.
    pub fn component(&self, p: usize) -> Vec<bool> {
        let adj = self.darts_at();
        let mut seen = vec![false; self.n_points];
        let mut stack = vec![p];
        seen[p] = true;
        while let Some(x) = stack.pop() {
            for &d in &adj[x] {
                let y = self.head(d);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n_points == 0 || self.component(0).iter().all(|&x| x)
    }

    pub fn validate_path(&self, path: &GraphPath) -> Result<(), GraphError> {
        if path.start >= self.n_points {
            return Err(GraphError::NoSuchPoint(path.start));
        }
        let mut at = path.start;
        for (i, &d) in path.darts.iter().enumerate() {
            if d.seg >= self.segs.len() {
                return Err(GraphError::NoSuchSegment(d.seg));
            }
            if self.tail(d) != at {
                return Err(GraphError::BrokenPath(i));
            }
            at = self.head(d);
        }
        Ok(())
    }

    /// Path from a segment word starting at `start`.
    pub fn path_from_word(&self, start: usize, w: &Word) -> Result<GraphPath, GraphError> {
        let p = GraphPath {
            start,
            darts: w.iter().map(|&l| Dart::from_letter(l)).collect(),
        };
        self.validate_path(&p)?;
        Ok(p)
    }
}

/// Breadth-first spanning tree from point 0.
pub fn spanning_tree(g: &Graph1) -> Result<Vec<usize>, GraphError> {
    spanning_tree_ordered(g, 0, &(0..g.n_segments()).collect::<Vec<_>>())
}

/// Breadth-first spanning tree from `root`, trying segments in `order`.
pub fn spanning_tree_ordered(g: &Graph1, root: usize, order: &[usize]) -> Result<Vec<usize>, GraphError> {
    if g.n_points() == 0 {
        return Ok(Vec::new());
    }
    if root >= g.n_points() {
        return Err(GraphError::NoSuchPoint(root));
    }
    let mut rank = vec![0; g.n_segments()];
    for (i, &s) in order.iter().enumerate() {
        rank[s] = i;
    }
    let mut adj = g.darts_at();
    for a in &mut adj {
        a.sort_by_key(|d| (rank[d.seg], d.rev));
    }
    let mut seen = vec![false; g.n_points()];
    seen[root] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &d in &adj[x] {
            let y = g.head(d);
            if !seen[y] {
                seen[y] = true;
                tree.push(d.seg);
                queue.push_back(y);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(GraphError::Disconnected);
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Whether `tree` is acyclic and spans `g`.
pub fn is_spanning_tree(g: &Graph1, tree: &[usize]) -> bool {
    if g.n_points() == 0 {
        return tree.is_empty();
    }
    if tree.len() + 1 != g.n_points() || tree.iter().any(|&s| s >= g.n_segments()) {
        return false;
    }
    let sub = Graph1 {
        n_points: g.n_points(),
        segs: tree.iter().map(|&s| g.segs[s]).collect(),
    };
    sub.is_connected()
}

/// `a = -a_0 + a_1 + 1`.
pub fn connectivity_number(g: &Graph1) -> Result<usize, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(g.n_segments() + 1 - g.n_points().max(1))
}

/// Tree paths from `base` to every point.
fn tree_paths(g: &Graph1, base: usize, tree: &[usize]) -> Result<Vec<GraphPath>, GraphError> {
    if !is_spanning_tree(g, tree) {
        return Err(GraphError::InvalidTree);
    }
    if base >= g.n_points() {
        return Err(GraphError::NoSuchPoint(base));
    }
    let mut in_tree = vec![false; g.n_segments()];
    for &s in tree {
        in_tree[s] = true;
    }
    let adj = g.darts_at();
    let mut paths: Vec<Option<GraphPath>> = vec![None; g.n_points()];
    paths[base] = Some(GraphPath {
        start: base,
        darts: Vec::new(),
    });
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for &d in &adj[x] {
            let y = g.head(d);
            if in_tree[d.seg] && paths[y].is_none() {
                let mut p = paths[x].clone().unwrap();
                p.darts.push(d);
                paths[y] = Some(p);
                queue.push_back(y);
            }
        }
    }
    Ok(paths.into_iter().map(|p| p.expect("tree spans")).collect())
}

/// Generators of the fundamental group at `base`: one loop
/// `w_1 s w_2⁻¹` per co-tree segment `s`, in segment order.
#[derive(Clone, Debug)]
pub struct FundamentalBasis {
    pub base: usize,
    pub cotree: Vec<usize>,
    pub loops: Vec<GraphPath>,
    tree_paths: Vec<GraphPath>,
}

pub fn fundamental_group_basis(g: &Graph1, base: usize, tree: &[usize]) -> Result<FundamentalBasis, GraphError> {
    let tp = tree_paths(g, base, tree)?;
    let mut in_tree = vec![false; g.n_segments()];
    for &s in tree {
        in_tree[s] = true;
    }
    let cotree: Vec<usize> = (0..g.n_segments()).filter(|&s| !in_tree[s]).collect();
    let loops = cotree
        .iter()
        .map(|&s| {
            let (a, b) = g.endpoints(s);
            let mut darts = tp[a].darts.clone();
            darts.push(Dart::fwd(s));
            darts.extend(tp[b].inverse(g).darts);
            GraphPath { start: base, darts }
        })
        .collect();
    Ok(FundamentalBasis {
        base,
        cotree,
        loops,
        tree_paths: tp,
    })
}

impl FundamentalBasis {
    /// Expresses a closed path at the base point in the loop generators
    /// (generator `i` is `loops[i]`). Tree segments are simply skipped.
    pub fn express(&self, g: &Graph1, path: &GraphPath) -> Result<Word, GraphError> {
        g.validate_path(path)?;
        if path.start != self.base || !path.is_closed(g) {
            return Err(GraphError::BrokenPath(0));
        }
        let mut out = Vec::new();
        for d in &path.darts {
            if let Some(i) = self.cotree.iter().position(|&s| s == d.seg) {
                out.push(Letter::new(i, d.rev));
            }
        }
        Ok(Word::from_letters(out))
    }

    /// Multiplies out a word in the loop generators as a segment word.
    pub fn multiply_out(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for &l in w {
            let lw = self.loops[l.generator()].word();
            out = out.concat(&if l.is_inverse() { lw.inverse() } else { lw });
        }
        out.free_reduce()
    }

    pub fn tree_path(&self, p: usize) -> &GraphPath {
        &self.tree_paths[p]
    }
}
