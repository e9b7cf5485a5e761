//! Target modified Rota-Baxter algebras and the universal morphism out of
//! `F(A)`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::Engine;
use crate::error::{Error, Result};
use crate::generator::{mul_elements, AElement, GeneratorBialgebra, UNIT};
use crate::rational::one;
use crate::word::Factor;
use crate::{LinComb, Rational, Word};

/// An associative algebra with a modified Rota-Baxter operator of weight
/// [`TargetMrba::kappa`].
pub trait TargetMrba {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn kappa(&self) -> Rational;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn op(&self, x: &Self::Elem) -> Self::Elem;

    /// `P(x)P(y) − P(xP(y)) − P(P(x)y) − κxy`.
    fn mrb_residual(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let (px, py) = (self.op(x), self.op(y));
        let minus = -one();
        let mut r = self.mul(&px, &py);
        r = self.add(&r, &self.scale(&minus, &self.op(&self.mul(x, &py))));
        r = self.add(&r, &self.scale(&minus, &self.op(&self.mul(&px, y))));
        self.add(&r, &self.scale(&-self.kappa(), &self.mul(x, y)))
    }
}

/// `k` with `P = −λ·id`, of weight `−λ²`.
#[derive(Debug, Clone)]
pub struct ScalarMrba {
    pub lambda: Rational,
}

impl TargetMrba for ScalarMrba {
    type Elem = Rational;

    fn kappa(&self) -> Rational {
        -(&self.lambda * &self.lambda)
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        one()
    }
    fn add(&self, x: &Rational, y: &Rational) -> Rational {
        x + y
    }
    fn scale(&self, c: &Rational, x: &Rational) -> Rational {
        c * x
    }
    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x * y
    }
    fn op(&self, x: &Rational) -> Rational {
        -(&self.lambda * x)
    }
}

/// The generator algebra `A` with `P = λ·id`, of weight `−λ²`.
#[derive(Debug, Clone)]
pub struct ScaledIdentityMrba {
    pub lambda: Rational,
    pub gen: Arc<dyn GeneratorBialgebra>,
}

impl TargetMrba for ScaledIdentityMrba {
    type Elem = AElement;

    fn kappa(&self) -> Rational {
        -(&self.lambda * &self.lambda)
    }
    fn zero(&self) -> AElement {
        AElement::new()
    }
    fn one(&self) -> AElement {
        AElement::from([(UNIT.to_string(), one())])
    }
    fn add(&self, x: &AElement, y: &AElement) -> AElement {
        let mut out = x.clone();
        for (k, c) in y {
            *out.entry(k.clone()).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
    fn scale(&self, c: &Rational, x: &AElement) -> AElement {
        if c.is_zero() {
            return AElement::new();
        }
        x.iter().map(|(k, d)| (k.clone(), c * d)).collect()
    }
    fn mul(&self, x: &AElement, y: &AElement) -> AElement {
        mul_elements(self.gen.as_ref(), x, y).unwrap_or_else(|e| panic!("{e}"))
    }
    fn op(&self, x: &AElement) -> AElement {
        self.scale(&self.lambda, x)
    }
}

/// `F(A)` itself with `P = ⌊·⌋`.
#[derive(Debug, Clone, Copy)]
pub struct FreeTarget<'a>(pub &'a Engine);

impl TargetMrba for FreeTarget<'_> {
    type Elem = LinComb;

    fn kappa(&self) -> Rational {
        self.0.kappa().clone()
    }
    fn zero(&self) -> LinComb {
        LinComb::zero()
    }
    fn one(&self) -> LinComb {
        LinComb::unit()
    }
    fn add(&self, x: &LinComb, y: &LinComb) -> LinComb {
        x.add(y)
    }
    fn scale(&self, c: &Rational, x: &LinComb) -> LinComb {
        x.scale(c)
    }
    fn mul(&self, x: &LinComb, y: &LinComb) -> LinComb {
        self.0.mul(x, y)
    }
    fn op(&self, x: &LinComb) -> LinComb {
        self.0.apply_op(x)
    }
}

/// How many bracket images are cross-checked against the target identity.
const SPOT_CHECKS: usize = 3;

/// The unique operator-preserving algebra map `f̄: F(A) → R` extending `f`
/// on generator basis elements: letters go through `f`, brackets through the
/// target operator, and factors multiply in the target.
///
/// `f` must extend to an algebra map `A → R`. The target operator is
/// spot-checked on the images of bracket contents met along the way.
pub fn universal_map<T, F>(engine: &Engine, target: &T, f: F, u: &LinComb) -> Result<T::Elem>
where
    T: TargetMrba,
    F: Fn(&str) -> T::Elem,
{
    if &target.kappa() != engine.kappa() {
        return Err(Error::TargetWeightMismatch {
            target: Box::new(target.kappa()),
            engine: Box::new(engine.kappa().clone()),
        });
    }
    let mut seen = Vec::new();
    let mut out = target.zero();
    for (w, c) in u {
        let img = image(target, &f, w, &mut seen);
        out = target.add(&out, &target.scale(c, &img));
    }
    for x in &seen {
        for y in &seen {
            if target.mrb_residual(x, y) != target.zero() {
                return Err(Error::TargetIdentityViolated);
            }
        }
    }
    Ok(out)
}

fn image<T, F>(target: &T, f: &F, w: &Word, seen: &mut Vec<T::Elem>) -> T::Elem
where
    T: TargetMrba,
    F: Fn(&str) -> T::Elem,
{
    let mut acc = target.one();
    for factor in w.factors() {
        let img = match factor {
            Factor::Letter(l) => f(l.as_str()),
            Factor::Bracket(inner) => {
                let g = image(target, f, inner, seen);
                if seen.len() < SPOT_CHECKS && !seen.contains(&g) {
                    seen.push(g.clone());
                }
                target.op(&g)
            }
        };
        acc = target.mul(&acc, &img);
    }
    acc
}
