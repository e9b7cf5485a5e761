//! The free modified Rota-Baxter algebra: product `⋄`, operator `P = ⌊·⌋`,
//! the identity checker, the universal morphism and a rewriting oracle.

mod oracle;
mod universal;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::generator::GeneratorBialgebra;
use crate::rational::one;
use crate::word::Factor;
use crate::{Expr, Letter, LinComb, Params, Rational, Word};

pub use oracle::oracle_normal_form;
pub use universal::{universal_map, FreeTarget, ScalarMrba, ScaledIdentityMrba, TargetMrba};

#[derive(Debug, Default)]
pub(crate) struct Caches {
    pub bracket: RwLock<HashMap<(Word, Word), LinComb>>,
    pub coproduct: RwLock<HashMap<Word, crate::Tensor2>>,
    pub antipode: RwLock<HashMap<Word, LinComb>>,
}

/// Computes in `F(A)` for fixed weights and a fixed generator bialgebra.
///
/// Memoization of bracket products, coproducts and antipodes on basis words
/// is off unless enabled with [`Engine::with_cache`]; results are identical
/// either way.
#[derive(Debug, Clone)]
pub struct Engine {
    params: Params,
    gen: Arc<dyn GeneratorBialgebra>,
    cache: Option<Arc<Caches>>,
}

impl Engine {
    pub fn new(params: Params, gen: Arc<dyn GeneratorBialgebra>) -> Self {
        Engine { params, gen, cache: None }
    }

    pub fn with_cache(mut self, enabled: bool) -> Self {
        self.cache = enabled.then(|| Arc::new(Caches::default()));
        self
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn lambda(&self) -> &Rational {
        &self.params.lambda
    }

    pub fn kappa(&self) -> &Rational {
        &self.params.kappa
    }

    pub fn generator(&self) -> &dyn GeneratorBialgebra {
        self.gen.as_ref()
    }

    pub(crate) fn caches(&self) -> Option<&Caches> {
        self.cache.as_deref()
    }

    /// Checks that every word is canonical and every letter is a non-unit
    /// basis element of the generator.
    pub fn validate(&self, u: &LinComb) -> Result<()> {
        for w in u.words() {
            self.validate_word(w)?;
        }
        Ok(())
    }

    pub fn validate_word(&self, w: &Word) -> Result<()> {
        if let Some(i) = w.factors().windows(2).position(|p| p[0].kind() == p[1].kind()) {
            return Err(Error::NotAlternating(i + 1));
        }
        for f in w.factors() {
            match f {
                Factor::Letter(l) if !self.gen.contains(l.as_str()) => {
                    return Err(Error::UnknownIndex(l.to_string()));
                }
                Factor::Letter(_) => {}
                Factor::Bracket(inner) => self.validate_word(inner)?,
            }
        }
        Ok(())
    }

    /// `j_A`: a generator basis element as an element of `F(A)`.
    pub fn embed(&self, index: &str) -> Result<LinComb> {
        if !self.gen.contains(index) {
            return Err(Error::UnknownIndex(index.to_string()));
        }
        Ok(index_word(index).into())
    }

    /// Degree of a word under the generator's filtration.
    pub fn degree(&self, w: &Word) -> usize {
        w.degree(self.gen.as_ref())
    }

    pub fn apply_op(&self, u: &LinComb) -> LinComb {
        u.iter().map(|(w, c)| (Word::bracket(w.clone()), c.clone())).collect()
    }

    pub fn mul(&self, u: &LinComb, v: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (x, c) in u {
            for (y, d) in v {
                out.add_scaled(&self.mul_words(x, y), &(c * d));
            }
        }
        out
    }

    /// Product of two basis words.
    pub fn mul_words(&self, x: &Word, y: &Word) -> LinComb {
        let (xs, ys) = (x.factors(), y.factors());
        let (Some(last), Some(first)) = (xs.last(), ys.first()) else {
            // one side is the unit
            return if x.is_unit() { y.clone().into() } else { x.clone().into() };
        };
        let middle = match (last, first) {
            (Factor::Letter(p), Factor::Letter(q)) => self.letter_product(p, q),
            (Factor::Bracket(u), Factor::Bracket(v)) => self.bracket_product(u, v),
            _ => return Word::from_parts(&[xs, ys]).into(),
        };
        self.canonicalize_splice(&xs[..xs.len() - 1], &middle, &ys[1..])
    }

    fn letter_product(&self, p: &Letter, q: &Letter) -> LinComb {
        let prod =
            self.gen.mul(p.as_str(), q.as_str()).unwrap_or_else(|e| panic!("letter outside the generator basis: {e}"));
        prod.into_iter().map(|(i, c)| (index_word(&i), c)).collect()
    }

    /// `⌊u⌋ ⋄ ⌊v⌋ = ⌊⌊u⌋ ⋄ v⌋ + ⌊u ⋄ ⌊v⌋⌋ + κ u ⋄ v`.
    fn bracket_product(&self, u: &Word, v: &Word) -> LinComb {
        if let Some(c) = self.caches() {
            if let Some(hit) = c.bracket.read().unwrap().get(&(u.clone(), v.clone())) {
                return hit.clone();
            }
        }
        let bu = Word::bracket(u.clone());
        let bv = Word::bracket(v.clone());
        let mut out = self.apply_op(&self.mul_words(&bu, v));
        out.add_scaled(&self.apply_op(&self.mul_words(u, &bv)), &one());
        out.add_scaled(&self.mul_words(u, v), &self.params.kappa);
        if let Some(c) = self.caches() {
            c.bracket.write().unwrap().insert((u.clone(), v.clone()), out.clone());
        }
        out
    }

    /// Splices each term of `middle` between two canonical fragments.
    ///
    /// Terms whose boundary factors are of the same kind as the adjacent
    /// fragment ends (including unit terms, which bring the fragments
    /// themselves into contact) are multiplied back in rather than
    /// concatenated, so the result stays in the canonical basis.
    pub fn canonicalize_splice(&self, prefix: &[Factor], middle: &LinComb, suffix: &[Factor]) -> LinComb {
        let mut out = LinComb::zero();
        for (m, c) in middle {
            let joined: Vec<&Factor> = prefix.last().into_iter().chain(m.factors()).chain(suffix.first()).collect();
            if joined.windows(2).all(|p| p[0].kind() != p[1].kind()) {
                out.add_term(Word::from_parts(&[prefix, m.factors(), suffix]), c.clone());
                continue;
            }
            let pre = Word::from_parts(&[prefix]);
            let suf = Word::from_parts(&[suffix]);
            for (t, d) in &self.mul_words(&pre, m) {
                out.add_scaled(&self.mul_words(t, &suf), &(c * d));
            }
        }
        out
    }

    /// `P(u) ⋄ P(v) − P(u ⋄ P(v)) − P(P(u) ⋄ v) − κ u ⋄ v`; zero exactly when
    /// the modified Rota-Baxter identity holds on the pair.
    pub fn check_mrb(&self, u: &LinComb, v: &LinComb) -> LinComb {
        let pu = self.apply_op(u);
        let pv = self.apply_op(v);
        let mut residual = self.mul(&pu, &pv);
        residual.add_scaled(&self.apply_op(&self.mul(u, &pv)), &-one());
        residual.add_scaled(&self.apply_op(&self.mul(&pu, v)), &-one());
        residual.add_scaled(&self.mul(u, v), &-self.params.kappa.clone());
        residual
    }

    /// Evaluates an expression tree with the engine's product and operator.
    pub fn eval(&self, e: &Expr) -> Result<LinComb> {
        Ok(match e {
            Expr::Unit => LinComb::unit(),
            Expr::Gen(s) => self.embed(s)?,
            Expr::Op(inner) => self.apply_op(&self.eval(inner)?),
            Expr::Scale(c, inner) => self.eval(inner)?.scale(c),
            Expr::Sum(xs) => {
                let mut out = LinComb::zero();
                for x in xs {
                    out.add_scaled(&self.eval(x)?, &one());
                }
                out
            }
            Expr::Prod(xs) => {
                let mut out = LinComb::unit();
                for x in xs {
                    out = self.mul(&out, &self.eval(x)?);
                    if out.is_zero() {
                        break;
                    }
                }
                out
            }
        })
    }
}

/// The word of a generator basis index: the unit or a single letter.
pub(crate) fn index_word(index: &str) -> Word {
    if index.is_empty() {
        Word::unit()
    } else {
        Word::letter(Letter::new(index).expect("non-empty index"))
    }
}

impl Engine {
    /// Maximum filtration degree over the support, `None` for zero.
    pub fn max_degree(&self, u: &LinComb) -> Option<usize> {
        u.words().map(|w| self.degree(w)).max()
    }
}
