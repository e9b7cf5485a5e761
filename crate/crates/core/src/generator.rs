//! Generator bialgebras `A`: the letters of bracketed words.
//!
//! A generator exposes a filtered basis indexed by strings, with the empty
//! string reserved for the unit, together with the structure constants of
//! its product, coproduct and counit.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{one, zero};
use crate::Rational;

/// Basis index of the unit of `A`.
pub const UNIT: &str = "";

/// An element of `A` in its basis.
pub type AElement = BTreeMap<String, Rational>;
/// An element of `A ⊗ A` in the product basis.
pub type ATensor = BTreeMap<(String, String), Rational>;

pub trait GeneratorBialgebra: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;

    fn contains(&self, index: &str) -> bool;

    fn mul(&self, left: &str, right: &str) -> Result<AElement>;

    fn coproduct(&self, index: &str) -> Result<ATensor>;

    fn counit(&self, index: &str) -> Result<Rational>;

    fn degree(&self, index: &str) -> Result<usize>;

    /// All basis indices of degree at most `max_degree`, unit included.
    fn basis_up_to(&self, max_degree: usize) -> Vec<String>;
}

/// `A = k`: the only basis element is the unit.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialGenerator;

impl TrivialGenerator {
    fn check(index: &str) -> Result<()> {
        if index == UNIT {
            Ok(())
        } else {
            Err(Error::UnknownIndex(index.to_string()))
        }
    }
}

impl GeneratorBialgebra for TrivialGenerator {
    fn name(&self) -> &str {
        "trivial"
    }

    fn contains(&self, index: &str) -> bool {
        index == UNIT
    }

    fn mul(&self, left: &str, right: &str) -> Result<AElement> {
        Self::check(left)?;
        Self::check(right)?;
        Ok(AElement::from([(UNIT.to_string(), one())]))
    }

    fn coproduct(&self, index: &str) -> Result<ATensor> {
        Self::check(index)?;
        Ok(ATensor::from([((UNIT.to_string(), UNIT.to_string()), one())]))
    }

    fn counit(&self, index: &str) -> Result<Rational> {
        Self::check(index)?;
        Ok(one())
    }

    fn degree(&self, index: &str) -> Result<usize> {
        Self::check(index)?;
        Ok(0)
    }

    fn basis_up_to(&self, _max_degree: usize) -> Vec<String> {
        vec![UNIT.to_string()]
    }
}

/// The free algebra `k⟨Y⟩` on a finite alphabet, with every symbol primitive.
///
/// Basis indices are words over the alphabet; the product is concatenation
/// and the coproduct is the unshuffle `Δ(w) = Σ w|_S ⊗ w|_{S^c}`.
#[derive(Debug, Clone)]
pub struct FreePrimitiveGenerator {
    alphabet: Vec<char>,
}

impl FreePrimitiveGenerator {
    /// Symbols must be distinct ASCII letters other than `P`.
    pub fn new(alphabet: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut symbols: Vec<char> = Vec::new();
        for c in alphabet {
            if !c.is_ascii_alphabetic() || c == 'P' {
                return Err(Error::InvalidGenerator(format!("symbol `{c}` is not allowed")));
            }
            if symbols.contains(&c) {
                return Err(Error::InvalidGenerator(format!("duplicate symbol `{c}`")));
            }
            symbols.push(c);
        }
        Ok(FreePrimitiveGenerator { alphabet: symbols })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    fn check(&self, index: &str) -> Result<()> {
        if self.contains(index) {
            Ok(())
        } else {
            Err(Error::UnknownIndex(index.to_string()))
        }
    }
}

impl GeneratorBialgebra for FreePrimitiveGenerator {
    fn name(&self) -> &str {
        "free"
    }

    fn contains(&self, index: &str) -> bool {
        index.chars().all(|c| self.alphabet.contains(&c))
    }

    fn mul(&self, left: &str, right: &str) -> Result<AElement> {
        self.check(left)?;
        self.check(right)?;
        Ok(AElement::from([(format!("{left}{right}"), one())]))
    }

    fn coproduct(&self, index: &str) -> Result<ATensor> {
        self.check(index)?;
        let chars: Vec<char> = index.chars().collect();
        assert!(chars.len() < 32, "A-word too long for the unshuffle coproduct");
        let mut out = ATensor::new();
        for mask in 0u32..(1u32 << chars.len()) {
            let mut left = String::new();
            let mut right = String::new();
            for (i, &c) in chars.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(c);
                } else {
                    right.push(c);
                }
            }
            *out.entry((left, right)).or_insert_with(zero) += one();
        }
        Ok(out)
    }

    fn counit(&self, index: &str) -> Result<Rational> {
        self.check(index)?;
        Ok(if index.is_empty() { one() } else { zero() })
    }

    fn degree(&self, index: &str) -> Result<usize> {
        self.check(index)?;
        Ok(index.chars().count())
    }

    fn basis_up_to(&self, max_degree: usize) -> Vec<String> {
        let mut out = vec![UNIT.to_string()];
        let mut layer = vec![String::new()];
        for _ in 0..max_degree {
            layer = layer.iter().flat_map(|w| self.alphabet.iter().map(move |c| format!("{w}{c}"))).collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

/// Product of two `A`-elements through the structure constants.
pub fn mul_elements(gen: &dyn GeneratorBialgebra, x: &AElement, y: &AElement) -> Result<AElement> {
    let mut out = AElement::new();
    for (i, c) in x {
        for (j, d) in y {
            for (k, e) in gen.mul(i, j)? {
                *out.entry(k).or_insert_with(zero) += c * d * e;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn tensor(terms: &[(&str, &str, i64)]) -> ATensor {
        terms.iter().map(|(l, r, c)| ((l.to_string(), r.to_string()), int(*c))).collect()
    }

    #[test]
    fn free_mul() {
        let g = FreePrimitiveGenerator::new(['a', 'b']).unwrap();
        assert_eq!(g.mul("a", "b").unwrap(), AElement::from([("ab".into(), one())]));
        assert_eq!(g.mul("ab", "").unwrap(), AElement::from([("ab".into(), one())]));
        assert_eq!(g.mul("a", "c"), Err(Error::UnknownIndex("c".into())));
    }

    #[test]
    fn trivial_mul() {
        let g = TrivialGenerator;
        assert_eq!(g.mul("", "").unwrap(), AElement::from([("".into(), one())]));
        assert!(g.mul("a", "").is_err());
        assert_eq!(g.basis_up_to(5), vec![String::new()]);
    }

    #[test]
    fn free_coproduct() {
        let g = FreePrimitiveGenerator::new(['a', 'b']).unwrap();
        assert_eq!(g.coproduct("a").unwrap(), tensor(&[("a", "", 1), ("", "a", 1)]));
        assert_eq!(g.coproduct("ab").unwrap(), tensor(&[("ab", "", 1), ("a", "b", 1), ("b", "a", 1), ("", "ab", 1)]));
        assert_eq!(g.coproduct("").unwrap(), tensor(&[("", "", 1)]));
        assert_eq!(g.coproduct("aa").unwrap(), tensor(&[("aa", "", 1), ("a", "a", 2), ("", "aa", 1)]));
    }

    #[test]
    fn counit_and_degree() {
        let g = FreePrimitiveGenerator::new(['a', 'b']).unwrap();
        assert_eq!(g.counit("").unwrap(), one());
        assert_eq!(g.counit("ab").unwrap(), zero());
        assert_eq!(g.degree("ab").unwrap(), 2);
        assert_eq!(g.degree("").unwrap(), 0);
        assert!(g.degree("x").is_err());
    }

    #[test]
    fn alphabet_validation() {
        assert!(FreePrimitiveGenerator::new(['a', 'a']).is_err());
        assert!(FreePrimitiveGenerator::new(['P']).is_err());
        assert!(FreePrimitiveGenerator::new(['1']).is_err());
    }

    #[test]
    fn basis_enumeration() {
        let g = FreePrimitiveGenerator::new(['a', 'b']).unwrap();
        assert_eq!(g.basis_up_to(2).len(), 1 + 2 + 4);
    }
}
