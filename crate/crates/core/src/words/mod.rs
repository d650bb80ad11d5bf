//! Words over a signed alphabet.
//!
//! A [`Letter`] is a generator index together with a sign. Generator indices
//! are 0-based in code; the text format numbers them from 1 (`a` = `x1`).
//! A [`Word`] is an arbitrary, possibly unreduced, sequence of letters. The
//! empty word is the identity everywhere.

mod cyclic_product;
mod torus;

pub use cyclic_product::{
    conjugate_in_cyclic_product, normal_form_cyclic_product, syllables, CyclicOrders,
    CyclicProductError, Syllable,
};
pub use torus::{normal_form_torus_type, TorusTypeError};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Index, Mul};
use std::str::FromStr;

use thiserror::Error;

/// A generator or its inverse, stored as `±(generator + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        let v = generator as i32 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn generator(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    fn key(self) -> (usize, bool) {
        (self.generator(), self.is_inverse())
    }
}

/// Ordered by generator, positive before inverse.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generator();
        if g < 26 {
            let c = (b'a' + g as u8) as char;
            if self.is_inverse() {
                write!(f, "{}", c.to_ascii_uppercase())
            } else {
                write!(f, "{}", c)
            }
        } else if self.is_inverse() {
            write!(f, "X{}", g + 1)
        } else {
            write!(f, "x{}", g + 1)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unrecognised token `{0}`")]
    BadToken(String),
    #[error("generator index must be at least 1 in `{0}`")]
    ZeroIndex(String),
}

/// A finite sequence of letters. Not necessarily reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// The word from signed 1-based integers, `[1, -2]` = `a B`.
    pub fn from_ints(ints: &[i32]) -> Self {
        Word(
            ints.iter()
                .map(|&i| {
                    assert!(i != 0, "zero is not a letter");
                    Letter(i)
                })
                .collect(),
        )
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    /// `S_g^e` as a reduced word.
    pub fn power_of(g: usize, e: i64) -> Self {
        let l = Letter::new(g, e < 0);
        Word(vec![l; e.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// The formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Juxtaposition without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Freely reduced `n`-th power (negative powers use the inverse).
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out).free_reduce()
    }

    /// Left-to-right stack scan cancelling adjacent inverse pairs.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && (self.0.len() < 2 || self.0[0] != self.0[self.0.len() - 1].inverse())
    }

    /// Splits the reduced form of `self` as `conjugator · core · conjugator⁻¹`
    /// with a cyclically reduced core.
    pub fn cyclic_reduce(&self) -> (Word, CyclicWord) {
        let r = self.free_reduce().0;
        let mut lo = 0;
        let mut hi = r.len();
        while hi - lo >= 2 && r[lo] == r[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let conjugator = Word(r[..lo].to_vec());
        let core = Word(r[lo..hi].to_vec());
        (conjugator, CyclicWord::from_cyclically_reduced(core))
    }

    /// The cyclically reduced core without choosing a canonical rotation.
    pub fn cyclic_core(&self) -> Word {
        let r = self.free_reduce().0;
        let mut lo = 0;
        let mut hi = r.len();
        while hi - lo >= 2 && r[lo] == r[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(r[lo..hi].to_vec())
    }

    pub fn rotate_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == g)
            .map(|l| l.sign())
            .sum()
    }

    /// Exponent sums of generators `0..n`; letters beyond `n` are ignored.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for l in &self.0 {
            if l.generator() < n {
                v[l.generator()] += l.sign();
            }
        }
        v
    }

    /// Number of occurrences of generator `g` in either direction.
    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.generator() == g).count()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }

    /// Image under the endomorphism sending generator `g` to `images[g]`.
    /// The result is freely reduced.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.generator()];
            if l.is_inverse() {
                out.extend(img.0.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(&img.0);
            }
        }
        Word(out).free_reduce()
    }

    /// Renames generators through `map` (`None` deletes the letter).
    pub fn relabel(&self, map: impl Fn(usize) -> Option<usize>) -> Word {
        Word(
            self.0
                .iter()
                .filter_map(|l| map(l.generator()).map(|g| Letter::new(g, l.is_inverse())))
                .collect(),
        )
    }
}

impl Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Product in the free group: juxtaposition followed by free reduction.
impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs).free_reduce()
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", self)
        }
    }
}

/// Space-separated tokens; the empty word prints as the empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// Accepts whitespace-separated tokens. A token `x12`/`X12` names generator
/// 12; any other token is read letter by letter (`a`..`z`, uppercase for the
/// inverse), so `abAB` and `a b A B` are the same word.
impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bytes = tok.as_bytes();
            if bytes.len() >= 2
                && (bytes[0] == b'x' || bytes[0] == b'X')
                && bytes[1..].iter().all(|b| b.is_ascii_digit())
            {
                let k: usize = tok[1..]
                    .parse()
                    .map_err(|_| WordParseError::BadToken(tok.to_string()))?;
                if k == 0 {
                    return Err(WordParseError::ZeroIndex(tok.to_string()));
                }
                letters.push(Letter::new(k - 1, bytes[0] == b'X'));
                continue;
            }
            for c in tok.chars() {
                if c.is_ascii_lowercase() {
                    letters.push(Letter::pos((c as u8 - b'a') as usize));
                } else if c.is_ascii_uppercase() {
                    letters.push(Letter::neg((c as u8 - b'A') as usize));
                } else {
                    return Err(WordParseError::BadToken(tok.to_string()));
                }
            }
        }
        Ok(Word(letters))
    }
}

/// A cyclically reduced word stored in its canonical rotation: the
/// lexicographically least rotation under the letter order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Word);

impl CyclicWord {
    /// Cyclically reduces `w` and picks the canonical rotation.
    pub fn new(w: &Word) -> Self {
        w.cyclic_reduce().1
    }

    fn from_cyclically_reduced(core: Word) -> Self {
        CyclicWord(least_rotation(&core))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `w` (already cyclically reduced) is a rotation of this word.
    pub fn is_rotation_of(&self, w: &Word) -> bool {
        w.len() == self.len() && least_rotation(w) == self.0
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.0)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Least rotation of any sequence under its `Ord`.
pub(crate) fn least_rotation_by<T: Clone + Ord>(v: &[T]) -> Vec<T> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0;
    for start in 1..n {
        for k in 0..n {
            let a = &v[(start + k) % n];
            let b = &v[(best + k) % n];
            match a.cmp(b) {
                Ordering::Less => {
                    best = start;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    (0..n).map(|k| v[(best + k) % n].clone()).collect()
}

fn least_rotation(w: &Word) -> Word {
    Word(least_rotation_by(&w.0))
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

pub fn cyclic_reduce(w: &Word) -> (Word, CyclicWord) {
    w.cyclic_reduce()
}

/// Conjugacy in the free group: the cyclic cores agree up to rotation.
pub fn conjugate_in_free(w1: &Word, w2: &Word) -> bool {
    CyclicWord::new(w1) == CyclicWord::new(w2)
}
