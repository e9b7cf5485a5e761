#![allow(dead_code)]

use std::sync::Arc;

use mrba_core::sample::WordSampler;
use mrba_core::{Engine, FreePrimitiveGenerator, GeneratorBialgebra, Params, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn free(alphabet: &[char]) -> Arc<dyn GeneratorBialgebra> {
    Arc::new(FreePrimitiveGenerator::new(alphabet.iter().copied()).unwrap())
}

pub fn hopf_engine(lambda: Rational, alphabet: &[char]) -> Engine {
    Engine::new(Params::hopf(lambda), free(alphabet)).with_cache(true)
}

pub fn sampler(engine: &Engine, max_depth: usize, max_breadth: usize) -> WordSampler {
    WordSampler::new(engine.generator(), 1, max_depth, max_breadth)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coproducts grow quickly with degree, so coalgebra suites cap it.
pub fn capped_sampler(engine: &Engine, max_depth: usize, max_breadth: usize, max_degree: usize) -> WordSampler {
    sampler(engine, max_depth, max_breadth).with_max_degree(max_degree)
}
