use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::one;
use crate::{Rational, Word};

/// A finitely supported rational combination of words. Zero coefficients
/// are never stored, so structural equality is exact equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<Word, Rational>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn unit() -> Self {
        LinComb::from(Word::unit())
    }

    pub fn scalar(c: Rational) -> Self {
        LinComb::term(c, Word::unit())
    }

    pub fn term(c: Rational, w: Word) -> Self {
        let mut out = LinComb::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending canonical word order.
    pub fn iter(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &LinComb, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &one());
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &-one());
        out
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    pub fn neg(&self) -> LinComb {
        self.scale(&-one())
    }

    /// Linear extension of a map on words.
    pub fn map_words<F>(&self, mut f: F) -> LinComb
    where
        F: FnMut(&Word) -> LinComb,
    {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }
}

impl From<Word> for LinComb {
    fn from(w: Word) -> Self {
        LinComb::term(one(), w)
    }
}

impl FromIterator<(Word, Rational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl<'a> IntoIterator for &'a LinComb {
    type Item = (&'a Word, &'a Rational);
    type IntoIter = btree_map::Iter<'a, Word, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Writes one signed term; shared with the tensor display.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: &str,
    body_is_unit: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    let mag = c.abs();
    match (first, negative) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    if body_is_unit {
        write!(f, "{mag}")
    } else if c.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{mag} {body}")
    }
}

/// Terms from the largest word down; a coefficient is omitted only when it
/// is exactly `1`. The zero element prints as `0`.
impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &w.to_string(), w.is_unit())?;
        }
        Ok(())
    }
}
