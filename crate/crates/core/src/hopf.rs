//! Filtration by degree, convolution of linear maps, and the antipode.

use std::collections::BTreeMap;

use crate::algebra::Engine;
use crate::error::{Error, Result};
use crate::word::Factor;
use crate::{Letter, LinComb, Word};

/// The filtration piece `H_n`: the span of words of degree at most `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiltrationView {
    pub cap: usize,
}

impl FiltrationView {
    pub fn new(cap: usize) -> Self {
        FiltrationView { cap }
    }

    pub fn contains(&self, engine: &Engine, u: &LinComb) -> bool {
        u.words().all(|w| engine.degree(w) <= self.cap)
    }

    /// Every basis word of degree at most `cap`, in canonical order.
    pub fn basis(&self, engine: &Engine) -> Vec<Word> {
        let gen = engine.generator();
        let mut letters: BTreeMap<usize, Vec<Letter>> = BTreeMap::new();
        for idx in gen.basis_up_to(self.cap) {
            if idx.is_empty() {
                continue;
            }
            let d = gen.degree(&idx).expect("enumerated index");
            // a non-unit basis element of degree 0 would break connectedness
            assert!(d > 0, "generator has a non-unit element `{idx}` of degree 0");
            letters.entry(d).or_default().push(Letter::new(&idx).expect("non-unit"));
        }

        // exact[d]: words of degree exactly d
        let mut exact: Vec<Vec<Word>> = vec![vec![Word::unit()]];
        for d in 1..=self.cap {
            // runs[k][kind]: factor sequences of degree k starting with kind (0 letter, 1 bracket)
            let mut runs: Vec<[Vec<Vec<Factor>>; 2]> = vec![[Vec::new(), Vec::new()]];
            for k in 1..=d {
                let mut here: [Vec<Vec<Factor>>; 2] = [Vec::new(), Vec::new()];
                for first in 1..=k {
                    let heads: [Vec<Factor>; 2] = [
                        letters.get(&first).into_iter().flatten().cloned().map(Factor::Letter).collect(),
                        exact[first - 1].iter().cloned().map(Factor::Bracket).collect(),
                    ];
                    for kind in 0..2 {
                        for h in &heads[kind] {
                            if first == k {
                                here[kind].push(vec![h.clone()]);
                            } else {
                                for rest in &runs[k - first][1 - kind] {
                                    let mut seq = Vec::with_capacity(rest.len() + 1);
                                    seq.push(h.clone());
                                    seq.extend(rest.iter().cloned());
                                    here[kind].push(seq);
                                }
                            }
                        }
                    }
                }
                runs.push(here);
            }
            let [a, b] = std::mem::take(&mut runs[d]);
            let mut words: Vec<Word> =
                a.into_iter().chain(b).map(|f| Word::from_factors(f).expect("alternating")).collect();
            words.sort();
            exact.push(words);
        }
        let mut all: Vec<Word> = exact.into_iter().flatten().collect();
        all.sort();
        all
    }
}

/// Linear endomorphisms of `F(A)` that convolution can be taken over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearMap {
    Identity,
    /// `η∘ε`: `u ↦ ε(u)·1`.
    UnitCounit,
    Antipode,
    Operator,
    /// Composition; the last map is applied first.
    Compose(Vec<LinearMap>),
}

impl LinearMap {
    pub fn apply(&self, engine: &Engine, u: &LinComb) -> Result<LinComb> {
        match self {
            LinearMap::Identity => Ok(u.clone()),
            LinearMap::UnitCounit => Ok(LinComb::scalar(engine.counit(u))),
            LinearMap::Antipode => engine.antipode(u),
            LinearMap::Operator => Ok(engine.apply_op(u)),
            LinearMap::Compose(maps) => {
                let mut acc = u.clone();
                for m in maps.iter().rev() {
                    acc = m.apply(engine, &acc)?;
                }
                Ok(acc)
            }
        }
    }
}

impl Engine {
    /// Maximum word degree over the support.
    pub fn filtration_degree(&self, u: &LinComb) -> Result<usize> {
        self.max_degree(u).ok_or(Error::ZeroElement)
    }

    /// `(f ⋆ g)(u) = ⋄∘(f⊗g)∘Δ(u)`.
    pub fn convolution(&self, f: &LinearMap, g: &LinearMap, u: &LinComb) -> Result<LinComb> {
        let mut out = LinComb::zero();
        for ([x, y], c) in &self.coproduct(u)? {
            let fx = f.apply(self, &x.clone().into())?;
            let gy = g.apply(self, &y.clone().into())?;
            out.add_scaled(&self.mul(&fx, &gy), c);
        }
        Ok(out)
    }

    /// The convolution inverse of the identity.
    ///
    /// On `ker ε`, `S(u) = −u − Σ S(u′₁) ⋄ u′₂` where `Σ u′₁⊗u′₂ = (π⊗π)Δ(u)`
    /// and `π(v) = v − ε(v)1`; every other element splits as `ε(u)1 + π(u)`.
    /// A tensor leg that fails to drop in degree is reported as
    /// [`Error::FiltrationViolation`].
    pub fn antipode(&self, u: &LinComb) -> Result<LinComb> {
        self.params().require_hopf()?;
        let mut out = LinComb::zero();
        for (w, c) in u {
            out.add_scaled(&self.antipode_word(w)?, c);
        }
        Ok(out)
    }

    fn antipode_word(&self, w: &Word) -> Result<LinComb> {
        if w.is_unit() {
            return Ok(LinComb::unit());
        }
        if let Some(c) = self.caches() {
            if let Some(hit) = c.antipode.read().unwrap().get(w) {
                return Ok(hit.clone());
            }
        }
        let deg = self.degree(w);
        let eps = self.counit_word(w);
        // S(π(w)) = −π(w) − Σ S(π x₁) ⋄ π x₂
        let mut s = LinComb::from(w.clone()).neg();
        s.add_term(Word::unit(), eps.clone());
        for ([x1, x2], c) in &self.coproduct_word(w) {
            if x1.is_unit() || x2.is_unit() {
                continue;
            }
            for leg in [x1, x2] {
                let d = self.degree(leg);
                if d >= deg {
                    return Err(Error::FiltrationViolation { leg: d, word: deg });
                }
            }
            let mut s1 = self.antipode_word(x1)?;
            s1.add_term(Word::unit(), -self.counit_word(x1));
            let mut p2 = LinComb::from(x2.clone());
            p2.add_term(Word::unit(), -self.counit_word(x2));
            s.add_scaled(&self.mul(&s1, &p2), &-c.clone());
        }
        // S(w) = S(π(w)) + ε(w)·1
        s.add_term(Word::unit(), eps);
        if let Some(c) = self.caches() {
            c.antipode.write().unwrap().insert(w.clone(), s.clone());
        }
        Ok(s)
    }
}
