//! Seeded property suites behind `check`.

use mrba_core::algebra::oracle_normal_form;
use mrba_core::rational::one;
use mrba_core::sample::WordSampler;
use mrba_core::{Engine, Error, Expr, LinComb, LinearMap, Tensor2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Assoc,
    Mrb,
    Coassoc,
    Counit,
    Compat,
    Cocycle,
    Antipode,
    Filtration,
    Oracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Assoc,
        Suite::Mrb,
        Suite::Coassoc,
        Suite::Counit,
        Suite::Compat,
        Suite::Cocycle,
        Suite::Antipode,
        Suite::Filtration,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Assoc => "assoc",
            Suite::Mrb => "mrb",
            Suite::Coassoc => "coassoc",
            Suite::Counit => "counit",
            Suite::Compat => "compat",
            Suite::Cocycle => "cocycle",
            Suite::Antipode => "antipode",
            Suite::Filtration => "filtration",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }

    /// Suites that use the coproduct and so need `κ = −λ²`.
    pub fn needs_hopf(self) -> bool {
        !matches!(self, Suite::Assoc | Suite::Mrb | Suite::Oracle)
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// `Some(counterexample)` on failure.
type Outcome = Result<Option<String>, Error>;

/// Degree caps keeping coproduct sizes in the thousands of terms.
const COPRODUCT_DEGREE: usize = 10;
const PAIR_DEGREE: usize = 6;
const ANTIPODE_DEGREE: usize = 8;

/// Runs `suite` on `cases` seeded cases and stops at the first failure.
pub fn run(engine: &Engine, suite: Suite, seed: u64, cases: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((suite as u64) << 32));
    let words = WordSampler::new(engine.generator(), 1, 3, 3);
    let single = words.clone().with_max_degree(COPRODUCT_DEGREE);
    let pairs = words.clone().with_max_degree(PAIR_DEGREE);
    let hopf = words.clone().with_max_degree(ANTIPODE_DEGREE);
    let mut failure = None;
    for _ in 0..cases {
        let outcome = match suite {
            Suite::Assoc => assoc(engine, &words, &mut rng),
            Suite::Mrb => mrb(engine, &words, &mut rng),
            Suite::Coassoc => coassoc(engine, &single, &mut rng),
            Suite::Counit => counit(engine, &single, &mut rng),
            Suite::Compat => compat(engine, &pairs, &mut rng),
            Suite::Cocycle => cocycle(engine, &single, &mut rng),
            Suite::Antipode => antipode(engine, &hopf, &mut rng),
            Suite::Filtration => filtration(engine, &words, &single, &mut rng),
            Suite::Oracle => oracle(engine, &mut rng),
            Suite::All => unreachable!("expanded by the caller"),
        };
        failure = outcome.unwrap_or_else(|err| Some(format!("error: {err}")));
        if failure.is_some() {
            break;
        }
    }
    Report { suite, cases, passed: failure.is_none(), counterexample: failure }
}

fn word(s: &WordSampler, rng: &mut ChaCha8Rng) -> LinComb {
    s.word(rng).into()
}

fn assoc(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let (u, v, w) = (word(s, rng), word(s, rng), word(s, rng));
    let lhs = e.mul(&e.mul(&u, &v), &w);
    let rhs = e.mul(&u, &e.mul(&v, &w));
    Ok((lhs != rhs).then(|| format!("u = {u}, v = {v}, w = {w}")))
}

fn mrb(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let (u, v) = (word(s, rng), word(s, rng));
    let r = e.check_mrb(&u, &v);
    Ok((!r.is_zero()).then(|| format!("u = {u}, v = {v}, residual = {r}")))
}

fn coassoc(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let u = word(s, rng);
    let d = e.coproduct(&u)?;
    Ok((e.coproduct_left(&d)? != e.coproduct_right(&d)?).then(|| format!("u = {u}")))
}

fn counit(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let u = word(s, rng);
    let d = e.coproduct(&u)?;
    Ok((e.counit_left(&d) != u || e.counit_right(&d) != u).then(|| format!("u = {u}")))
}

fn compat(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let (u, v) = (word(s, rng), word(s, rng));
    let uv = e.mul(&u, &v);
    let lhs = e.coproduct(&uv)?;
    let rhs = e.tensor2_mul(&e.coproduct(&u)?, &e.coproduct(&v)?);
    Ok((lhs != rhs || e.counit(&uv) != e.counit(&u) * e.counit(&v)).then(|| format!("u = {u}, v = {v}")))
}

fn cocycle(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let u = word(s, rng);
    if e.coproduct(&e.apply_op(&u))? != e.cocycle_rhs(&u)? {
        return Ok(Some(format!("u = {u}")));
    }
    let small = WordSampler::new(e.generator(), 1, 2, 2);
    let (x, y): (Tensor2, Tensor2) = (small.tensor(rng, 2), small.tensor(rng, 2));
    let (px, py) = (e.tensor2_op(&x)?, e.tensor2_op(&y)?);
    let mut rhs = e.tensor2_op(&e.tensor2_mul(&x, &py))?;
    rhs.add_scaled(&e.tensor2_op(&e.tensor2_mul(&px, &y))?, &one());
    rhs.add_scaled(&e.tensor2_mul(&x, &y), &-(e.lambda() * e.lambda()));
    Ok((e.tensor2_mul(&px, &py) != rhs).then(|| format!("tensor operator at x = {x}, y = {y}")))
}

fn antipode(e: &Engine, s: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let u = word(s, rng);
    let want = LinearMap::UnitCounit.apply(e, &u)?;
    let left = e.convolution(&LinearMap::Antipode, &LinearMap::Identity, &u)?;
    let right = e.convolution(&LinearMap::Identity, &LinearMap::Antipode, &u)?;
    Ok((left != want || right != want).then(|| format!("u = {u}")))
}

fn filtration(e: &Engine, s: &WordSampler, capped: &WordSampler, rng: &mut ChaCha8Rng) -> Outcome {
    let (u, v) = (word(s, rng), word(s, rng));
    let bound = e.max_degree(&u).unwrap_or(0) + e.max_degree(&v).unwrap_or(0);
    if e.mul(&u, &v).words().any(|w| e.degree(w) > bound) {
        return Ok(Some(format!("product of u = {u}, v = {v}")));
    }
    let w = capped.word(rng);
    let d = e.degree(&w);
    let d_w = e.coproduct(&w.clone().into())?;
    Ok(d_w.iter().any(|([x, y], _)| e.degree(x) + e.degree(y) > d).then(|| format!("coproduct of {w}")))
}

/// A random tree with at most three products and three operator nodes.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, leaves: &[Expr]) -> Expr {
    fn grow<R: Rng + ?Sized>(rng: &mut R, leaves: &[Expr], prods: &mut usize, ops: &mut usize) -> Expr {
        let mut moves = vec![0];
        if *ops > 0 {
            moves.push(1);
        }
        if *prods > 0 {
            moves.extend([2, 2]);
        }
        match moves[rng.gen_range(0..moves.len())] {
            1 => {
                *ops -= 1;
                Expr::op(grow(rng, leaves, prods, ops))
            }
            2 => {
                *prods -= 1;
                let l = grow(rng, leaves, prods, ops);
                Expr::prod(l, grow(rng, leaves, prods, ops))
            }
            _ => leaves[rng.gen_range(0..leaves.len())].clone(),
        }
    }
    grow(rng, leaves, &mut 3, &mut 3)
}

pub fn tree_leaves(engine: &Engine) -> Vec<Expr> {
    let mut leaves = vec![Expr::Unit];
    leaves.extend(engine.generator().basis_up_to(1).into_iter().filter(|i| !i.is_empty()).map(Expr::Gen));
    leaves
}

fn oracle(e: &Engine, rng: &mut ChaCha8Rng) -> Outcome {
    let t = random_tree(rng, &tree_leaves(e));
    let (fast, slow) = (e.eval(&t)?, oracle_normal_form(e, &t)?);
    Ok((fast != slow).then(|| format!("expr = {t}, engine = {fast}, oracle = {slow}")))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use mrba_core::rational::int;
    use mrba_core::{FreePrimitiveGenerator, Params};

    use super::*;

    #[test]
    fn every_suite_passes_briefly() {
        let e = Engine::new(Params::hopf(int(1)), Arc::new(FreePrimitiveGenerator::new(['a', 'b']).unwrap()))
            .with_cache(true);
        for s in Suite::All.expand() {
            let r = run(&e, s, 3, 10);
            assert!(r.passed, "{}: {:?}", s.name(), r.counterexample);
        }
    }

    #[test]
    fn trees_respect_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let leaves = [Expr::Unit, Expr::gen("a")];
        for _ in 0..200 {
            let t = random_tree(&mut rng, &leaves);
            assert!(t.product_nodes() <= 3 && t.op_nodes() <= 3);
        }
    }
}
