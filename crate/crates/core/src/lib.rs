//! Exact symbolic engine for the free modified Rota-Baxter algebra `F(A)` on a
//! connected filtered bialgebra `A`.
//!
//! Elements of `F(A)` are finite rational combinations of bracketed words
//! ([`Word`]). The [`Engine`] carries the weights `λ`, `κ` and the generator
//! bialgebra, and exposes the product `⋄`, the operator `P = ⌊·⌋`, the
//! universal morphism, the counit, the cocycle coproduct and the antipode.
//!
//! ```
//! use mrba_core::{Engine, FreePrimitiveGenerator, LinComb, Params, Word, Letter};
//! use std::sync::Arc;
//!
//! let gen = Arc::new(FreePrimitiveGenerator::new(['a', 'b']).unwrap());
//! let engine = Engine::new(Params::hopf(mrba_core::rational::int(1)), gen);
//! let a = LinComb::from(Word::letter(Letter::new("a").unwrap()));
//! let b = LinComb::from(Word::letter(Letter::new("b").unwrap()));
//! let prod = engine.mul(&engine.apply_op(&a), &engine.apply_op(&b));
//! assert_eq!(prod.len(), 3);
//! ```

pub mod algebra;
pub mod coalgebra;
mod error;
pub mod expr;
pub mod generator;
pub mod hopf;
mod lincomb;
mod params;
pub mod rational;
pub mod sample;
mod word;

pub use algebra::Engine;
pub use coalgebra::{Tensor, Tensor2, Tensor3};
pub use error::{Error, Result};
pub use expr::Expr;
pub use generator::{AElement, ATensor, FreePrimitiveGenerator, GeneratorBialgebra, TrivialGenerator};
pub use hopf::{FiltrationView, LinearMap};
pub use lincomb::LinComb;
pub use params::Params;
pub use rational::Rational;
pub use word::{Factor, FactorKind, Letter, Word};
