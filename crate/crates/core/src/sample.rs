//! Seeded random words and elements for property suites.

use num_bigint::BigInt;
use rand::Rng;

use crate::generator::GeneratorBialgebra;
use crate::word::Factor;
use crate::{Letter, LinComb, Rational, Tensor, Word};

/// Shape limits for random words.
#[derive(Debug, Clone)]
pub struct WordSampler {
    letters: Vec<(Letter, usize)>,
    pub max_depth: usize,
    pub max_breadth: usize,
    /// Words above this degree are redrawn.
    pub max_degree: Option<usize>,
}

impl WordSampler {
    /// Letters are drawn from the generator's non-unit basis up to
    /// `letter_degree`.
    pub fn new(gen: &dyn GeneratorBialgebra, letter_degree: usize, max_depth: usize, max_breadth: usize) -> Self {
        let letters = gen
            .basis_up_to(letter_degree)
            .into_iter()
            .filter(|i| !i.is_empty())
            .map(|i| {
                let d = gen.degree(&i).expect("basis index");
                (Letter::new(&i).expect("non-unit"), d)
            })
            .collect();
        WordSampler { letters, max_depth, max_breadth: max_breadth.max(1), max_degree: None }
    }

    pub fn with_max_degree(mut self, cap: usize) -> Self {
        self.max_degree = Some(cap);
        self
    }

    pub fn word<R: Rng + ?Sized>(&self, rng: &mut R) -> Word {
        loop {
            let w = self.word_within(rng, self.max_depth);
            match self.max_degree {
                Some(cap) if self.degree(&w) > cap => continue,
                _ => return w,
            }
        }
    }

    fn degree(&self, w: &Word) -> usize {
        w.factors()
            .iter()
            .map(|f| match f {
                Factor::Letter(l) => self.letters.iter().find(|(x, _)| x == l).map_or(0, |(_, d)| *d),
                Factor::Bracket(inner) => 1 + self.degree(inner),
            })
            .sum()
    }

    fn word_within<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Word {
        if rng.gen_ratio(1, 8) {
            return Word::unit();
        }
        let can_letter = !self.letters.is_empty();
        let can_bracket = depth > 0;
        let mut breadth = rng.gen_range(1..=self.max_breadth);
        let mut letter_next = match (can_letter, can_bracket) {
            (false, false) => return Word::unit(),
            (true, false) => {
                breadth = 1;
                true
            }
            (false, true) => {
                breadth = 1;
                false
            }
            (true, true) => rng.gen_bool(0.5),
        };
        let mut factors = Vec::with_capacity(breadth);
        for _ in 0..breadth {
            factors.push(if letter_next {
                Factor::Letter(self.letters[rng.gen_range(0..self.letters.len())].0.clone())
            } else {
                Factor::Bracket(self.word_within(rng, depth - 1))
            });
            letter_next = !letter_next;
        }
        Word::from_factors(factors).expect("alternating by construction")
    }

    /// Nonzero small rational: numerator in `-3..=3`, denominator in `1..=2`.
    pub fn coeff<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let mut n = 0;
        while n == 0 {
            n = rng.gen_range(-3i64..=3);
        }
        Rational::new(BigInt::from(n), BigInt::from(rng.gen_range(1i64..=2)))
    }

    /// Up to `max_terms` random words with random coefficients.
    pub fn lincomb<R: Rng + ?Sized>(&self, rng: &mut R, max_terms: usize) -> LinComb {
        let n = rng.gen_range(1..=max_terms.max(1));
        (0..n).map(|_| (self.word(rng), self.coeff(rng))).collect()
    }

    pub fn tensor<const N: usize, R: Rng + ?Sized>(&self, rng: &mut R, max_terms: usize) -> Tensor<N> {
        let n = rng.gen_range(1..=max_terms.max(1));
        (0..n)
            .map(|_| {
                let key: [Word; N] = std::array::from_fn(|_| self.word(rng));
                (key, self.coeff(rng))
            })
            .collect()
    }
}
