//! Counit, cocycle coproduct and the tensor-level operators on
//! `F(A)^{⊗2}` and `F(A)^{⊗3}`.
//!
//! Everything except the counit needs `κ = −λ²`.

mod tensor;

pub use tensor::{Tensor, Tensor2, Tensor3};

use num_traits::Zero;

use crate::algebra::{index_word, Engine};
use crate::error::Result;
use crate::rational::one;
use crate::word::Factor;
use crate::{LinComb, Rational, Word};

impl Engine {
    /// The algebra map `ε: F(A) → k` with `ε∘j = ε_A` and `ε∘P = −λ·ε`.
    pub fn counit(&self, u: &LinComb) -> Rational {
        u.iter().map(|(w, c)| c * self.counit_word(w)).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn counit_word(&self, w: &Word) -> Rational {
        let mut acc = one();
        for f in w.factors() {
            let e = match f {
                Factor::Letter(l) => self
                    .generator()
                    .counit(l.as_str())
                    .unwrap_or_else(|e| panic!("letter outside the generator basis: {e}")),
                Factor::Bracket(inner) => -(self.lambda() * self.counit_word(inner)),
            };
            if e.is_zero() {
                return e;
            }
            acc *= e;
        }
        acc
    }

    /// `Δ` on `F(A)`: `Δ_A` on letters, `Δ∘P = P̃∘Δ` on brackets, and
    /// multiplicative over the standard decomposition.
    pub fn coproduct(&self, u: &LinComb) -> Result<Tensor2> {
        self.params().require_hopf()?;
        let mut out = Tensor2::zero();
        for (w, c) in u {
            out.add_scaled(&self.coproduct_word(w), c);
        }
        Ok(out)
    }

    pub(crate) fn coproduct_word(&self, w: &Word) -> Tensor2 {
        if let Some(c) = self.caches() {
            if let Some(hit) = c.coproduct.read().unwrap().get(w) {
                return hit.clone();
            }
        }
        let mut out = Tensor2::unit();
        for f in w.factors() {
            let part = match f {
                Factor::Letter(l) => self.letter_coproduct(l.as_str()),
                Factor::Bracket(inner) => self.tensor_op_unchecked(&self.coproduct_word(inner)),
            };
            out = self.tensor_mul(&out, &part);
        }
        if let Some(c) = self.caches() {
            c.coproduct.write().unwrap().insert(w.clone(), out.clone());
        }
        out
    }

    fn letter_coproduct(&self, index: &str) -> Tensor2 {
        let t = self.generator().coproduct(index).unwrap_or_else(|e| panic!("letter outside the generator basis: {e}"));
        t.into_iter().map(|((l, r), c)| ([index_word(&l), index_word(&r)], c)).collect()
    }

    /// Componentwise product `(a⊗b)⋄′(c⊗d) = (a⋄c)⊗(b⋄d)`.
    pub fn tensor_mul<const N: usize>(&self, s: &Tensor<N>, t: &Tensor<N>) -> Tensor<N> {
        let mut out = Tensor::zero();
        for (x, c) in s {
            for (y, d) in t {
                let legs: Vec<LinComb> = (0..N).map(|i| self.mul_words(&x[i], &y[i])).collect();
                let refs: [&LinComb; N] = std::array::from_fn(|i| &legs[i]);
                out.add_scaled(&Tensor::from_factors(refs), &(c * d));
            }
        }
        out
    }

    pub fn tensor2_mul(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        self.tensor_mul(s, t)
    }

    pub fn tensor3_mul(&self, s: &Tensor3, t: &Tensor3) -> Tensor3 {
        self.tensor_mul(s, t)
    }

    /// `P̃(x⊗x′) = (P(x)+λx)⊗ε(x′)1 + x⊗P(x′)`.
    pub fn tensor2_op(&self, t: &Tensor2) -> Result<Tensor2> {
        self.params().require_hopf()?;
        Ok(self.tensor_op_unchecked(t))
    }

    /// `P̃̃(x⊗x′⊗x″) = (P(x)+λx)⊗ε(x′)1⊗ε(x″)1 + x⊗(P(x′)+λx′)⊗ε(x″)1 + x⊗x′⊗P(x″)`.
    pub fn tensor3_op(&self, t: &Tensor3) -> Result<Tensor3> {
        self.params().require_hopf()?;
        Ok(self.tensor_op_unchecked(t))
    }

    /// The operator on `N`-fold tensors: for each slot `i < N`, slot `i`
    /// becomes `P(x_i)+λx_i` and every later slot collapses to `ε(x_j)1`;
    /// the last summand applies `P` to the final slot alone.
    fn tensor_op_unchecked<const N: usize>(&self, t: &Tensor<N>) -> Tensor<N> {
        let mut out = Tensor::zero();
        for (key, c) in t {
            for i in 0..N - 1 {
                let mut coeff = c.clone();
                for w in &key[i + 1..] {
                    coeff *= self.counit_word(w);
                }
                if coeff.is_zero() {
                    continue;
                }
                let mut head = key.clone();
                for w in &mut head[i + 1..] {
                    *w = Word::unit();
                }
                let mut bracketed = head.clone();
                bracketed[i] = Word::bracket(head[i].clone());
                out.add_term(bracketed, coeff.clone());
                out.add_term(head, coeff * self.lambda());
            }
            let mut last = key.clone();
            last[N - 1] = Word::bracket(key[N - 1].clone());
            out.add_term(last, c.clone());
        }
        out
    }

    /// `(Δ⊗id)`.
    pub fn coproduct_left(&self, t: &Tensor2) -> Result<Tensor3> {
        self.params().require_hopf()?;
        let mut out = Tensor3::zero();
        for ([x, y], c) in t {
            for ([a, b], d) in &self.coproduct_word(x) {
                out.add_term([a.clone(), b.clone(), y.clone()], c * d);
            }
        }
        Ok(out)
    }

    /// `(id⊗Δ)`.
    pub fn coproduct_right(&self, t: &Tensor2) -> Result<Tensor3> {
        self.params().require_hopf()?;
        let mut out = Tensor3::zero();
        for ([x, y], c) in t {
            for ([a, b], d) in &self.coproduct_word(y) {
                out.add_term([x.clone(), a.clone(), b.clone()], c * d);
            }
        }
        Ok(out)
    }

    /// `(ε⊗id)`.
    pub fn counit_left(&self, t: &Tensor2) -> LinComb {
        t.iter().map(|([x, y], c)| (y.clone(), c * self.counit_word(x))).collect()
    }

    /// `(id⊗ε)`.
    pub fn counit_right(&self, t: &Tensor2) -> LinComb {
        t.iter().map(|([x, y], c)| (x.clone(), c * self.counit_word(y))).collect()
    }

    /// `P(u)⊗1 + (id⊗P)Δ(u) + λ·u⊗1`, computed without going through `Δ(P(u))`.
    pub fn cocycle_rhs(&self, u: &LinComb) -> Result<Tensor2> {
        let one_lc = LinComb::unit();
        let mut out = Tensor2::from_factors([&self.apply_op(u), &one_lc]);
        out.add_scaled(&self.coproduct(u)?.map_slot(1, |w| Word::bracket(w.clone()).into()), &one());
        out.add_scaled(&Tensor2::from_factors([u, &one_lc]), self.lambda());
        Ok(out)
    }
}

#[cfg(test)]
mod tests;
