//! Integer Laurent polynomials `Σ c_e x^e`, `e ∈ Z`.
//!
//! A polynomial is only determined up to a unit `±x^n` when it arises as an
//! elementary divisor, so most results are returned in canonical form: an
//! ordinary polynomial with nonzero constant term and positive leading
//! coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("gcd of an all-zero list")]
    AllZero,
    #[error("cannot parse Laurent polynomial term `{0}`")]
    Parse(String),
    #[error("division of {0} by {1} is not exact")]
    InexactDivision(String, String),
    #[error(transparent)]
    Guard(#[from] super::MinorGuardExceeded),
}

/// Sparse map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly(BTreeMap<i64, BigInt>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    pub fn x() -> Self {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        LaurentPoly(m)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(BigInt::from(c), 0)
    }

    /// Coefficients of `x^low, x^{low+1}, ..`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.0.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, the degree of the canonical form.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiplication by `x^n`.
    pub fn shift(&self, n: i64) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, c)| (e + n, c.clone())).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&e, c) in &self.0 {
            p.add_term(e, c * k);
        }
        p
    }

    /// `x ↦ x⁻¹`.
    pub fn conjugate(&self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, c)| (-e, c.clone())).collect())
    }

    /// Representative of `{±x^n · self}` with least exponent 0 and positive
    /// leading coefficient.
    pub fn canonical(&self) -> LaurentPoly {
        let Some(low) = self.min_exp() else {
            return LaurentPoly::zero();
        };
        let p = self.shift(-low);
        if p.0.values().next_back().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    /// Equality up to a unit `±x^n`.
    pub fn associated(&self, other: &LaurentPoly) -> bool {
        self.canonical() == other.canonical()
    }

    fn to_dense_rational(&self) -> Vec<BigRational> {
        let low = self.min_exp().unwrap_or(0);
        let high = self.max_exp().unwrap_or(-1);
        (low..=high)
            .map(|e| BigRational::from_integer(self.coeff(e)))
            .collect()
    }

    /// Exact quotient `self / d` in `Z[x, x⁻¹]`, or `None`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (fl, dl) = (self.min_exp().unwrap(), d.min_exp().unwrap());
        let mut rem = self.shift(-fl);
        let dd = d.shift(-dl);
        let ddeg = dd.max_exp().unwrap();
        let lead = dd.coeff(ddeg);
        let mut q = LaurentPoly::zero();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                return None;
            }
            let (c, r) = rem.coeff(rdeg).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::monomial(c, rdeg - ddeg);
            rem = &rem - &(&t * &dd);
            q = &q + &t;
        }
        Some(q.shift(fl - dl))
    }

    /// Applies `Σ c_e X^e` to `v` over `Z/modulus`, with `X` given together
    /// with its inverse.
    pub fn act_mod(&self, x: &[Vec<i64>], x_inv: &[Vec<i64>], v: &[i64], modulus: i64) -> Vec<i64> {
        let apply = |m: &[Vec<i64>], u: &[i64]| -> Vec<i64> {
            m.iter()
                .map(|row| {
                    row.iter()
                        .zip(u)
                        .map(|(a, b)| a * b)
                        .sum::<i64>()
                        .rem_euclid(modulus)
                })
                .collect()
        };
        let mut out = vec![0i64; v.len()];
        for (&e, c) in &self.0 {
            let mut u = v.to_vec();
            let m = if e < 0 { x_inv } else { x };
            for _ in 0..e.unsigned_abs() {
                u = apply(m, &u);
            }
            let c = (c % BigInt::from(modulus)).to_i64().unwrap();
            for (o, ui) in out.iter_mut().zip(&u) {
                *o = (*o + c * ui).rem_euclid(modulus);
            }
        }
        out
    }
}

fn from_dense_rational(v: &[BigRational]) -> LaurentPoly {
    // clear denominators, then divide out the content
    let den = v
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut p = LaurentPoly::zero();
    for (i, c) in v.iter().enumerate() {
        p.add_term(i as i64, c.numer() * (&den / c.denom()));
    }
    primitive_part(&p)
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            r[k + i] -= t;
        }
        trim(&mut r);
    }
    r
}

fn rational_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rational_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Gcd of the absolute values of the coefficients; 0 for the zero polynomial.
pub fn content(f: &LaurentPoly) -> BigInt {
    f.0.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// `f / (content · ±x^n)`: an ordinary polynomial with nonzero constant term,
/// positive leading coefficient and coprime coefficients.
pub fn primitive_part(f: &LaurentPoly) -> LaurentPoly {
    let c = content(f);
    if c.is_zero() {
        return LaurentPoly::zero();
    }
    let mut p = LaurentPoly::zero();
    for (&e, k) in &f.0 {
        p.add_term(e, k / &c);
    }
    p.canonical()
}

/// Canonical greatest common divisor: the gcd of the contents times the
/// primitive gcd taken over the rationals.
pub fn laurent_gcd(fs: &[LaurentPoly]) -> Result<LaurentPoly, LaurentError> {
    let nonzero: Vec<&LaurentPoly> = fs.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(LaurentError::AllZero);
    }
    let a = nonzero.iter().fold(BigInt::zero(), |acc, f| acc.gcd(&content(f)));
    let mut g = primitive_part(nonzero[0]).to_dense_rational();
    for f in &nonzero[1..] {
        if g.len() == 1 {
            break;
        }
        g = rational_gcd(g, primitive_part(f).to_dense_rational());
    }
    Ok(from_dense_rational(&g).scale(&a))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.0 {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.0 {
            p.add_term(e, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&e, c) in &self.0 {
            for (&f, d) in &rhs.0 {
                p.add_term(e + f, c * d);
            }
        }
        p
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Descending exponents with signs: `-x^3 + x + 3x^-2`. Zero is `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.0.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{}", a)?;
            }
            if e == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{}", e)?;
            }
        }
        Ok(())
    }
}

fn parse_term(t: &str) -> Result<(i64, BigInt), LaurentError> {
    let err = || LaurentError::Parse(t.to_string());
    match t.find('x') {
        None => Ok((0, t.parse().map_err(|_| err())?)),
        Some(i) => {
            let coef = match &t[..i] {
                "" | "+" => BigInt::one(),
                "-" => -BigInt::one(),
                s => s.trim_end_matches('*').parse().map_err(|_| err())?,
            };
            let rest = &t[i + 1..];
            let e = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(err)?
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse()
                    .map_err(|_| err())?
            };
            Ok((e, coef))
        }
    }
}

/// Accepts the display format as well as `x^2 - x + 1` style input.
impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(LaurentError::Parse(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for c in compact.chars() {
            let split = (c == '+' || c == '-')
                && !cur.is_empty()
                && !matches!(prev, Some('^') | Some('+') | Some('-') | Some('('));
            if split {
                terms.push(std::mem::take(&mut cur));
            }
            if !(c == '+' && cur.is_empty()) {
                cur.push(c);
            }
            prev = Some(c);
        }
        terms.push(cur);
        let mut p = LaurentPoly::zero();
        for t in terms {
            if t.is_empty() {
                return Err(LaurentError::Parse(s.to_string()));
            }
            let (e, c) = parse_term(&t)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}
