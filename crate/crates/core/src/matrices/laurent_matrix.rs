use std::fmt;
use std::str::FromStr;

use super::laurent::{laurent_gcd, LaurentError, LaurentPoly};
use super::minors::{check_guard, for_each_subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, super::MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(super::MatrixError::Ragged {
                    row: i,
                    found: row.len(),
                    expected: c,
                });
            }
            data.extend(row);
        }
        Ok(LaurentMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.cols + j] = v;
    }

    /// Determinant of the square submatrix on `rs × cs`, by cofactor
    /// expansion along the first row.
    fn minor(&self, rs: &[usize], cs: &[usize]) -> LaurentPoly {
        match rs.len() {
            0 => LaurentPoly::one(),
            1 => self.get(rs[0], cs[0]).clone(),
            _ => {
                let mut acc = LaurentPoly::zero();
                let rest_rows = &rs[1..];
                for (k, &c) in cs.iter().enumerate() {
                    let e = self.get(rs[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> =
                        cs.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
                    let term = e * &self.minor(rest_rows, &rest_cols);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }
}

/// One row per line, entries separated by `;`.
impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(";"))?;
        }
        Ok(())
    }
}

impl FromStr for LaurentMatrix {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push(
                line.split(';')
                    .map(str::parse)
                    .collect::<Result<Vec<LaurentPoly>, _>>()?,
            );
        }
        LaurentMatrix::from_rows(rows).map_err(|e| LaurentError::Parse(e.to_string()))
    }
}

/// `d_k = δ_k / δ_{k-1}` in canonical form, `δ_k` the gcd of the `k × k`
/// minors. Returns the nonzero divisors and the rank.
pub fn laurent_elementary_divisors(
    m: &LaurentMatrix,
) -> Result<(Vec<LaurentPoly>, usize), LaurentError> {
    check_guard(m.rows(), m.cols())?;
    let mut out = Vec::new();
    let mut prev = LaurentPoly::one();
    for k in 1..=m.rows().min(m.cols()) {
        let mut minors = Vec::new();
        for_each_subset(m.rows(), k, |rs| {
            for_each_subset(m.cols(), k, |cs| {
                let d = m.minor(rs, cs);
                if !d.is_zero() {
                    minors.push(d);
                }
            });
        });
        if minors.is_empty() {
            break;
        }
        let delta = laurent_gcd(&minors)?;
        let d = delta
            .div_exact(&prev)
            .ok_or_else(|| LaurentError::InexactDivision(delta.to_string(), prev.to_string()))?;
        out.push(d.canonical());
        prev = delta;
    }
    let rank = out.len();
    Ok((out, rank))
}
