//! Bracketed words: the canonical basis of `F(A)`.
//!
//! A word is an alternating sequence of generator letters and bracketed
//! sub-words. The empty sequence is the unit.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::generator::GeneratorBialgebra;

/// A non-unit basis element of the generator algebra `A`, identified by its
/// index string (for the free generator, the `A`-word itself).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(index: &str) -> Result<Self> {
        if index.is_empty() {
            return Err(Error::UnitLetter);
        }
        Ok(Letter(Arc::from(index)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One factor of the standard decomposition. The derived order puts letters
/// before brackets, which is the canonical word order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Letter(Letter),
    Bracket(Word),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    Letter = 0,
    Bracket = 1,
}

impl Factor {
    pub fn kind(&self) -> FactorKind {
        match self {
            Factor::Letter(_) => FactorKind::Letter,
            Factor::Bracket(_) => FactorKind::Bracket,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Factor>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![Factor::Letter(letter)])
    }

    /// `⌊w⌋`.
    pub fn bracket(inner: Word) -> Self {
        Word(vec![Factor::Bracket(inner)])
    }

    /// Builds a word from factors, checking alternation at the top level.
    /// Bracket contents are assumed canonical.
    pub fn from_factors(factors: Vec<Factor>) -> Result<Self> {
        if let Some(i) = factors.windows(2).position(|w| w[0].kind() == w[1].kind()) {
            return Err(Error::NotAlternating(i + 1));
        }
        Ok(Word(factors))
    }

    /// Concatenation without any boundary check.
    pub(crate) fn from_parts(parts: &[&[Factor]]) -> Self {
        let len = parts.iter().map(|p| p.len()).sum();
        let mut v = Vec::with_capacity(len);
        for p in parts {
            v.extend_from_slice(p);
        }
        Word(v)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn into_factors(self) -> Vec<Factor> {
        self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Alternation holds at every nesting level.
    pub fn is_canonical(&self) -> bool {
        self.0.windows(2).all(|w| w[0].kind() != w[1].kind())
            && self.0.iter().all(|f| match f {
                Factor::Letter(_) => true,
                Factor::Bracket(w) => w.is_canonical(),
            })
    }

    pub fn depth(&self) -> usize {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Letter(_) => 0,
                Factor::Bracket(w) => w.depth() + 1,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn breadth(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::EmptyWord("breadth"));
        }
        Ok(self.0.len())
    }

    pub fn head(&self) -> Result<FactorKind> {
        self.0.first().map(Factor::kind).ok_or(Error::EmptyWord("head"))
    }

    pub fn tail(&self) -> Result<FactorKind> {
        self.0.last().map(Factor::kind).ok_or(Error::EmptyWord("tail"))
    }

    /// Filtration degree: letters carry their `A`-degree, each bracket adds one.
    ///
    /// Letters must belong to `gen`'s basis.
    pub fn degree(&self, gen: &dyn GeneratorBialgebra) -> usize {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Letter(l) => {
                    gen.degree(l.as_str()).unwrap_or_else(|e| panic!("letter outside the generator basis: {e}"))
                }
                Factor::Bracket(w) => w.degree(gen) + 1,
            })
            .sum()
    }

    /// Every letter, at any nesting level, in order of appearance.
    pub fn letters(&self) -> Vec<&Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters<'a>(&'a self, out: &mut Vec<&'a Letter>) {
        for f in &self.0 {
            match f {
                Factor::Letter(l) => out.push(l),
                Factor::Bracket(w) => w.collect_letters(out),
            }
        }
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

/// `P(...)` notation with `*` between factors; the unit prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match factor {
                Factor::Letter(l) => write!(f, "{l}")?,
                Factor::Bracket(w) => write!(f, "P({w})")?,
            }
        }
        Ok(())
    }
}
