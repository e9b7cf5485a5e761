//! Normal forms by string rewriting, independent of the engine's recursive
//! product.
//!
//! A product of normal forms is concatenated as a raw factor string and then
//! rewritten at the leftmost offending adjacency until alternation holds:
//! two letters multiply through the generator, and two brackets use
//! `⌊u⌋⌊v⌋ → ⌊⌊u⌋v⌋ + ⌊u⌊v⌋⌋ + κ uv`. Bracket contents are always brought
//! to normal form before the surrounding string is rewritten.

use super::{index_word, Engine};
use crate::error::Result;
use crate::rational::one;
use crate::word::Factor;
use crate::{Expr, LinComb, Word};

/// Normal form of an expression tree by innermost-first exhaustive rewriting.
pub fn oracle_normal_form(engine: &Engine, e: &Expr) -> Result<LinComb> {
    Ok(match e {
        Expr::Unit => LinComb::unit(),
        Expr::Gen(s) => {
            engine.embed(s)?;
            LinComb::from(index_word(s))
        }
        Expr::Op(inner) => {
            let n = oracle_normal_form(engine, inner)?;
            n.iter().map(|(w, c)| (Word::bracket(w.clone()), c.clone())).collect()
        }
        Expr::Scale(c, inner) => oracle_normal_form(engine, inner)?.scale(c),
        Expr::Sum(xs) => {
            let mut out = LinComb::zero();
            for x in xs {
                out.add_scaled(&oracle_normal_form(engine, x)?, &one());
            }
            out
        }
        Expr::Prod(xs) => {
            let mut acc = LinComb::unit();
            for x in xs {
                let rhs = oracle_normal_form(engine, x)?;
                let mut next = LinComb::zero();
                for (l, c) in &acc {
                    for (r, d) in &rhs {
                        let raw: Vec<Factor> = l.factors().iter().chain(r.factors()).cloned().collect();
                        next.add_scaled(&rewrite(engine, raw), &(c * d));
                    }
                }
                acc = next;
            }
            acc
        }
    })
}

/// Rewrites a raw factor string whose bracket contents are already normal.
fn rewrite(engine: &Engine, raw: Vec<Factor>) -> LinComb {
    let Some(i) = raw.windows(2).position(|p| p[0].kind() == p[1].kind()) else {
        return Word::from_factors(raw).expect("alternating").into();
    };
    let (before, after) = (&raw[..i], &raw[i + 2..]);
    let mut out = LinComb::zero();
    match (&raw[i], &raw[i + 1]) {
        (Factor::Letter(p), Factor::Letter(q)) => {
            let prod = engine
                .generator()
                .mul(p.as_str(), q.as_str())
                .unwrap_or_else(|e| panic!("letter outside the generator basis: {e}"));
            for (idx, c) in prod {
                let mid = index_word(&idx);
                out.add_scaled(&rewrite(engine, splice(before, mid.factors(), after)), &c);
            }
        }
        (Factor::Bracket(u), Factor::Bracket(v)) => {
            // ⌊⌊u⌋v⌋
            let left: Vec<Factor> =
                std::iter::once(Factor::Bracket(u.clone())).chain(v.factors().iter().cloned()).collect();
            for (inner, c) in &rewrite(engine, left) {
                let mid = [Factor::Bracket(inner.clone())];
                out.add_scaled(&rewrite(engine, splice(before, &mid, after)), c);
            }
            // ⌊u⌊v⌋⌋
            let right: Vec<Factor> =
                u.factors().iter().cloned().chain(std::iter::once(Factor::Bracket(v.clone()))).collect();
            for (inner, c) in &rewrite(engine, right) {
                let mid = [Factor::Bracket(inner.clone())];
                out.add_scaled(&rewrite(engine, splice(before, &mid, after)), c);
            }
            // κ uv
            let flat: Vec<Factor> = u.factors().iter().chain(v.factors()).cloned().collect();
            let flat: Vec<Factor> = before.iter().cloned().chain(flat).chain(after.iter().cloned()).collect();
            out.add_scaled(&rewrite(engine, flat), engine.kappa());
        }
        _ => unreachable!("position matched equal kinds"),
    }
    out
}

fn splice(before: &[Factor], mid: &[Factor], after: &[Factor]) -> Vec<Factor> {
    before.iter().chain(mid).chain(after).cloned().collect()
}
