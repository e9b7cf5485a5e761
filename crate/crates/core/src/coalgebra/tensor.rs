use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::Zero;

use crate::lincomb::write_term;
use crate::rational::one;
use crate::{LinComb, Rational, Word};

/// A finitely supported rational combination of `N`-fold word tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    terms: BTreeMap<[Word; N], Rational>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const N: usize> Default for Tensor<N> {
    fn default() -> Self {
        Tensor { terms: BTreeMap::new() }
    }
}

impl<const N: usize> Tensor<N> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit() -> Self {
        Self::term(one(), std::array::from_fn(|_| Word::unit()))
    }

    pub fn term(c: Rational, key: [Word; N]) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
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

    pub fn coeff(&self, key: &[Word; N]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending order of their word tuples.
    pub fn iter(&self) -> btree_map::Iter<'_, [Word; N], Rational> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: [Word; N], c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Tensor { terms: self.terms.iter().map(|(k, d)| (k.clone(), d * c)).collect() }
    }

    /// Pure tensor `u_1 ⊗ … ⊗ u_N` of linear combinations.
    pub fn from_factors(parts: [&LinComb; N]) -> Self {
        let mut out = Self::unit();
        for (slot, part) in parts.iter().enumerate() {
            let mut next = Self::zero();
            for (k, c) in &out.terms {
                for (w, d) in *part {
                    let mut key = k.clone();
                    key[slot] = w.clone();
                    next.add_term(key, c * d);
                }
            }
            out = next;
        }
        out
    }

    /// Applies a linear map to one tensor slot.
    pub fn map_slot<F>(&self, slot: usize, mut f: F) -> Self
    where
        F: FnMut(&Word) -> LinComb,
    {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (w, d) in &f(&k[slot]) {
                let mut key = k.clone();
                key[slot] = w.clone();
                out.add_term(key, c * d);
            }
        }
        out
    }
}

impl<const N: usize> FromIterator<([Word; N], Rational)> for Tensor<N> {
    fn from_iter<I: IntoIterator<Item = ([Word; N], Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, const N: usize> IntoIterator for &'a Tensor<N> {
    type Item = (&'a [Word; N], &'a Rational);
    type IntoIter = btree_map::Iter<'a, [Word; N], Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Same conventions as [`LinComb`]'s display, legs joined by ` (x) `.
impl<const N: usize> fmt::Display for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let body = k.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" (x) ");
            write_term(f, i == 0, c, &body, false)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::word::tests::{l, w};

    #[test]
    fn pure_tensor_and_slot_map() {
        let a: LinComb = w(vec![l("a")]).into();
        let t = Tensor2::from_factors([&a, &LinComb::unit()]);
        assert_eq!(t, Tensor2::term(int(1), [w(vec![l("a")]), Word::unit()]));
        let doubled = t.map_slot(1, |x| LinComb::term(int(2), x.clone()));
        assert_eq!(doubled, t.scale(&int(2)));
        assert_eq!(t.to_string(), "a (x) 1");
        assert!(t.sub(&t).is_zero());
    }
}
