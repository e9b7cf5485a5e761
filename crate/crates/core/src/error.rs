use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator basis index `{0}`")]
    UnknownIndex(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("letters cannot denote the unit of A")]
    UnitLetter,
    #[error("factor sequence violates alternation at position {0}")]
    NotAlternating(usize),
    #[error("{0} is undefined on the empty word")]
    EmptyWord(&'static str),
    #[error("coalgebra operations require kappa = -lambda^2 (lambda = {lambda}, kappa = {kappa})")]
    WeightMismatch { lambda: Box<Rational>, kappa: Box<Rational> },
    #[error("target algebra has weight {target}, engine has weight {engine}")]
    TargetWeightMismatch { target: Box<Rational>, engine: Box<Rational> },
    #[error("target operator fails the modified Rota-Baxter identity on images of the input")]
    TargetIdentityViolated,
    #[error("filtration degree of the zero element is undefined")]
    ZeroElement,
    #[error("filtration violated: tensor leg of degree {leg} under word of degree {word}")]
    FiltrationViolation { leg: usize, word: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
