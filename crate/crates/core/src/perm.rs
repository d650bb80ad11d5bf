//! Permutations of `{0, .., n-1}` in image form.
//!
//! Composition is left to right: `p.then(&q)` first applies `p`, then `q`.
//! That matches how coset tables and voltages act on the right.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping cycles,
    /// composed left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut p = Perm::identity(n);
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(PermError::OutOfRange { point: x, degree: n });
                }
            }
            let mut c = Perm::identity(n);
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                c.0[x] = y;
            }
            Perm::from_images(c.0.clone())?;
            p = p.then(&c);
        }
        Ok(p)
    }

    /// Parses cycle notation such as `(0 1)(2 3 4)`; `()` or an empty string
    /// is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::Syntax(text.to_string()));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Syntax(text.to_string()))?;
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let x: usize = tok
                    .parse()
                    .map_err(|_| PermError::Syntax(text.to_string()))?;
                cycle.push(x);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut result = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            result = result.then(&base);
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(i, j)| i == *j).map(|(i, _)| i)
    }

    /// All cycles including fixed points, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses `degree:cycles`, e.g. `3:(0 1 2)`.
impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| PermError::Syntax(s.to_string()))?;
        let n = deg
            .trim()
            .parse()
            .map_err(|_| PermError::Syntax(s.to_string()))?;
        Perm::parse_cycles(n, cycles)
    }
}

/// Closure of a set of permutations under composition, breadth first from
/// the identity. Returns `None` when more than `limit` elements appear.
pub fn closure(gens: &[Perm], degree: usize, limit: usize) -> Option<Vec<Perm>> {
    use std::collections::HashMap;
    let id = Perm::identity(degree);
    let mut index: HashMap<Perm, usize> = HashMap::new();
    let mut elements = vec![id.clone()];
    index.insert(id, 0);
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        for s in gens {
            let h = g.then(s);
            if !index.contains_key(&h) {
                if elements.len() >= limit {
                    return None;
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
    }
    Some(elements)
}

/// Whether the group generated by `gens` acts transitively on `0..degree`.
pub fn is_transitive(gens: &[Perm], degree: usize) -> bool {
    if degree == 0 {
        return true;
    }
    let mut seen = vec![false; degree];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            for y in [g.apply(x), g.inverse().apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
    }
    count == degree
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::parse_cycles(5, "(0 1)(2 3 4)").unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse_cycles(3, "()").unwrap(), Perm::identity(3));
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse_cycles(3, "(0 1)").unwrap();
        let b = Perm::parse_cycles(3, "(1 2)").unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_points() {
        assert!(Perm::parse_cycles(2, "(0 2)").is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn closure_of_s3() {
        let t = Perm::parse_cycles(3, "(0 1)").unwrap();
        let c = Perm::parse_cycles(3, "(0 1 2)").unwrap();
        assert_eq!(closure(&[t, c], 3, 100).unwrap().len(), 6);
    }
}
