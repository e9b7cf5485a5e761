//! Text and JSON renderings of results.
//!
//! JSON words are factor lists: `{"letter":"ab"}` or `{"bracket":[...]}`,
//! with `[]` for the unit. Coefficients are always `"p/q"` strings.

use mrba_core::rational::{self, to_fraction_string};
use mrba_core::{Factor, Letter, LinComb, Rational, Tensor2, Word};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("bad coefficient `{0}`")]
    Coeff(String),
    #[error(transparent)]
    Word(#[from] mrba_core::Error),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FactorJson {
    Letter(String),
    Bracket(Vec<FactorJson>),
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    word: Vec<FactorJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LinCombJson {
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Term2Json {
    coeff: String,
    left: Vec<FactorJson>,
    right: Vec<FactorJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Tensor2Json {
    terms: Vec<Term2Json>,
}

fn word_json(w: &Word) -> Vec<FactorJson> {
    w.factors()
        .iter()
        .map(|f| match f {
            Factor::Letter(l) => FactorJson::Letter(l.as_str().to_string()),
            Factor::Bracket(inner) => FactorJson::Bracket(word_json(inner)),
        })
        .collect()
}

fn word_from_json(fs: Vec<FactorJson>) -> Result<Word, DecodeError> {
    let factors = fs
        .into_iter()
        .map(|f| {
            Ok(match f {
                FactorJson::Letter(s) => Factor::Letter(Letter::new(&s)?),
                FactorJson::Bracket(inner) => Factor::Bracket(word_from_json(inner)?),
            })
        })
        .collect::<Result<Vec<_>, DecodeError>>()?;
    Ok(Word::from_factors(factors)?)
}

fn coeff_from_json(s: &str) -> Result<Rational, DecodeError> {
    rational::parse(s).ok_or_else(|| DecodeError::Coeff(s.to_string()))
}

pub fn lincomb_json(u: &LinComb) -> String {
    let terms = u.iter().map(|(w, c)| TermJson { coeff: to_fraction_string(c), word: word_json(w) }).collect();
    serde_json::to_string(&LinCombJson { terms }).expect("serializable")
}

pub fn lincomb_from_json(text: &str) -> Result<LinComb, DecodeError> {
    let parsed: LinCombJson = serde_json::from_str(text)?;
    let mut out = LinComb::zero();
    for t in parsed.terms {
        out.add_term(word_from_json(t.word)?, coeff_from_json(&t.coeff)?);
    }
    Ok(out)
}

pub fn tensor2_json(t: &Tensor2) -> String {
    let terms = t
        .iter()
        .map(|([l, r], c)| Term2Json { coeff: to_fraction_string(c), left: word_json(l), right: word_json(r) })
        .collect();
    serde_json::to_string(&Tensor2Json { terms }).expect("serializable")
}

pub fn tensor2_from_json(text: &str) -> Result<Tensor2, DecodeError> {
    let parsed: Tensor2Json = serde_json::from_str(text)?;
    let mut out = Tensor2::zero();
    for t in parsed.terms {
        out.add_term([word_from_json(t.left)?, word_from_json(t.right)?], coeff_from_json(&t.coeff)?);
    }
    Ok(out)
}

pub fn rational_json(r: &Rational) -> String {
    serde_json::to_string(&to_fraction_string(r)).expect("serializable")
}

/// An expression the parser reads back to `u`.
pub fn lincomb_expr(u: &LinComb) -> String {
    if u.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in u.iter().enumerate() {
        let sign = c < &rational::zero();
        match (i, sign) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = if sign { -c } else { c.clone() };
        out.push_str(&format!("{}*{}", to_fraction_string(&mag), w));
    }
    out
}

pub fn render_lincomb(u: &LinComb, format: Format) -> String {
    match format {
        Format::Text => u.to_string(),
        Format::Json => lincomb_json(u),
    }
}

pub fn render_tensor2(t: &Tensor2, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => tensor2_json(t),
    }
}

/// Text drops a unit denominator; JSON never does.
pub fn render_rational(r: &Rational, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Json => rational_json(r),
    }
}

pub fn render_degree(d: usize, format: Format) -> String {
    match format {
        Format::Text => d.to_string(),
        Format::Json => serde_json::to_string(&d).expect("serializable"),
    }
}
