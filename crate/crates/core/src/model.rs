//! The random digraph D(n, p): every unordered pair becomes an edge with
//! probability 2p, independently, and each present edge receives a uniform
//! orientation. The output therefore never contains a digon or loop.
//!
//! Sampling is reproducible across platforms: the generator is ChaCha8
//! seeded from a 64-bit value, pairs are consumed in lexicographic order
//! (u < v), and each pair draws one `f64` plus, when the edge is present,
//! one `bool` for its direction. Per-trial seeds are derived from a master
//! seed with [`derive_seed`].

use crate::digraph::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("p = {0} is outside [0, 1/2] (edge probability is 2p)")]
    InvalidP(f64),
    #[error("digraph order must be at least 1")]
    EmptyOrder,
    #[error("p = {p} derived from delta = {delta}, n = {n} exceeds 1/2; model undefined")]
    DerivedPTooLarge { p: f64, delta: usize, n: usize },
}

/// Parameters of one D(n, p) draw. `p` is the per-direction probability, as
/// in the source formulas; the edge probability is 2p.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl ModelParams {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyOrder);
        }
        if !(0.0..=0.5).contains(&p) {
            return Err(ModelError::InvalidP(p));
        }
        Ok(ModelParams { n, p, seed })
    }
}

/// Draw one digraph from D(n, p). Deterministic for a fixed seed.
pub fn sample(params: &ModelParams) -> Digraph {
    let two_p = 2.0 * params.p;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut arcs = Vec::new();
    for u in 0..params.n {
        for v in (u + 1)..params.n {
            if rng.gen::<f64>() < two_p {
                if rng.gen::<bool>() {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    Digraph::from_arcs(params.n, arcs).expect("sampled arcs are loop- and duplicate-free")
}

/// p = Δ / (4 e n), the probability driving the girth construction. Errors
/// when the value leaves the model's domain.
pub fn p_theorem1(delta: usize, n: usize) -> Result<f64, ModelError> {
    assert!(delta >= 1, "delta must be at least 1");
    if n == 0 {
        return Err(ModelError::EmptyOrder);
    }
    let p = delta as f64 / (4.0 * std::f64::consts::E * n as f64);
    if p > 0.5 {
        return Err(ModelError::DerivedPTooLarge { p, delta, n });
    }
    Ok(p)
}

/// p = k² / n, the probability behind the locally-2-colorable construction.
pub fn p_theorem2(k: usize, n: usize) -> Result<f64, ModelError> {
    assert!(k >= 1, "k must be at least 1");
    if n == 0 {
        return Err(ModelError::EmptyOrder);
    }
    let p = (k * k) as f64 / n as f64;
    if p > 0.5 {
        return Err(ModelError::DerivedPTooLarge { p, delta: k, n });
    }
    Ok(p)
}

/// SplitMix64 finalizer.
fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the seed of stream `index` from a master seed:
/// `splitmix64(splitmix64(master) ^ index)`. Used for per-trial streams so
/// that trials are independent of execution order and parallelism.
pub fn derive_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master_seed) ^ index)
}
