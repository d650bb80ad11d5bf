//! Text format for presentations.
//!
//! ```text
//! gens: a b
//! rel: a b A B
//! ```
//!
//! Generator names are arbitrary tokens. A single lowercase letter name is
//! inverted by upper-casing it; any name can be inverted as `name^-1`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Presentation, PresentationError};
use crate::words::{Letter, Word, WordParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `gens:` line")]
    MissingGenerators,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error(transparent)]
    Word(#[from] WordParseError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Display names for positional generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorNames(Vec<String>);

impl GeneratorNames {
    /// `a`, `b`, .., `z`, then `x27`, `x28`, ..
    pub fn default_for(n: usize) -> Self {
        GeneratorNames((0..n).map(|g| Letter::pos(g).to_string()).collect())
    }

    pub fn new(names: Vec<String>) -> Result<Self, PresentationParseError> {
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(PresentationParseError::DuplicateName(a.clone()));
            }
        }
        Ok(GeneratorNames(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.0[g]
    }

    fn single_lower(&self, g: usize) -> Option<char> {
        let mut it = self.0[g].chars();
        match (it.next(), it.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => Some(c),
            _ => None,
        }
    }

    pub fn format_letter(&self, l: Letter) -> String {
        let g = l.generator();
        if g >= self.0.len() {
            return l.to_string();
        }
        if !l.is_inverse() {
            self.0[g].clone()
        } else if let Some(c) = self.single_lower(g) {
            c.to_ascii_uppercase().to_string()
        } else {
            format!("{}^-1", self.0[g])
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn lookup(&self, tok: &str) -> Option<Letter> {
        if let Some(g) = self.0.iter().position(|n| n == tok) {
            return Some(Letter::pos(g));
        }
        if let Some(base) = tok.strip_suffix("^-1") {
            if let Some(g) = self.0.iter().position(|n| n == base) {
                return Some(Letter::neg(g));
            }
        }
        let mut chars = tok.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if c.is_ascii_uppercase() {
                let lower = c.to_ascii_lowercase();
                if let Some(g) = (0..self.0.len()).find(|&g| self.single_lower(g) == Some(lower)) {
                    return Some(Letter::neg(g));
                }
            }
        }
        None
    }

    /// Parses a word over these names. Tokens that are not names are split
    /// into single characters.
    pub fn parse_word(&self, s: &str) -> Result<Word, WordParseError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(l) = self.lookup(tok) {
                out.push(l);
                continue;
            }
            for c in tok.chars() {
                let l = self
                    .lookup(&c.to_string())
                    .ok_or_else(|| WordParseError::BadToken(tok.to_string()))?;
                out.push(l);
            }
        }
        Ok(Word::from_letters(out))
    }
}

impl Presentation {
    /// Parses the text format, returning the presentation and its names.
    pub fn parse_text(text: &str) -> Result<(Presentation, GeneratorNames), PresentationParseError> {
        let mut names: Option<GeneratorNames> = None;
        let mut rels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if names.is_some() {
                    return Err(PresentationParseError::Syntax {
                        line: i + 1,
                        msg: "second `gens:` line".into(),
                    });
                }
                for tok in rest.split_whitespace() {
                    if tok.contains('^') {
                        return Err(PresentationParseError::Syntax {
                            line: i + 1,
                            msg: format!("bad generator name `{}`", tok),
                        });
                    }
                }
                names = Some(GeneratorNames::new(
                    rest.split_whitespace().map(String::from).collect(),
                )?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let n = names.as_ref().ok_or(PresentationParseError::MissingGenerators)?;
                rels.push(n.parse_word(rest)?);
            } else {
                return Err(PresentationParseError::Syntax {
                    line: i + 1,
                    msg: format!("expected `gens:` or `rel:`, got `{}`", line),
                });
            }
        }
        let names = names.ok_or(PresentationParseError::MissingGenerators)?;
        let p = Presentation::new(names.len(), rels)?;
        Ok((p, names))
    }

    pub fn to_text(&self, names: &GeneratorNames) -> String {
        let mut s = String::from("gens:");
        for g in 0..self.n_generators() {
            s.push(' ');
            s.push_str(names.name(g));
        }
        s.push('\n');
        for r in self.relators() {
            s.push_str("rel:");
            if !r.is_empty() {
                s.push(' ');
                s.push_str(&names.format_word(r));
            }
            s.push('\n');
        }
        s
    }
}

impl FromStr for Presentation {
    type Err = PresentationParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Presentation::parse_text(s).map(|(p, _)| p)
    }
}

/// Canonical text with default names.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&GeneratorNames::default_for(self.n_generators())))
    }
}
