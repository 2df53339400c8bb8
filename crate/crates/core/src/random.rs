//! Seeded random signed graphs, factor sets and bases for property checks.
//!
//! Everything is driven by `ChaCha8Rng::seed_from_u64`, so a seed fixes the
//! whole corpus. `SIGNET_SEED` in the environment overrides [`DEFAULT_SEED`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Sign, SignedGraph};
use crate::products::Basis;

pub const DEFAULT_SEED: u64 = 0x5167_4e45_5453_0001;
pub const SEED_ENV: &str = "SIGNET_SEED";

pub const CORPUS_SIZE: usize = 500;
pub const CORPUS_MAX_ORDER: usize = 8;
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// `SIGNET_SEED` if set and parseable, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Erdős–Rényi `G(n, p)` with uniformly random signs.
pub fn signed_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v, random_sign(rng)));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated pairs are distinct and in range")
}

/// `count` graphs with `n` uniform in `0..=max_order` and edge probability
/// cycling through [`EDGE_PROBABILITIES`].
pub fn corpus(seed: u64, count: usize, max_order: usize) -> Vec<SignedGraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(0..=max_order);
            signed_gnp(&mut r, n, EDGE_PROBABILITIES[i % EDGE_PROBABILITIES.len()])
        })
        .collect()
}

/// The standard corpus: 500 graphs on at most 8 vertices.
pub fn standard_corpus(seed: u64) -> Vec<SignedGraph> {
    corpus(seed, CORPUS_SIZE, CORPUS_MAX_ORDER)
}

/// Random basis on `nu` factors; always valid (full support, no zero vector).
pub fn basis<R: Rng + ?Sized>(rng: &mut R, nu: usize) -> Basis {
    assert!(nu >= 1 && nu < usize::BITS as usize);
    let all: Vec<usize> = (1..(1usize << nu)).collect();
    loop {
        let k = rng.gen_range(1..=all.len());
        let chosen: Vec<Vec<bool>> = all
            .choose_multiple(rng, k)
            .map(|&mask| (0..nu).map(|i| mask >> i & 1 == 1).collect())
            .collect();
        if let Ok(b) = Basis::new(nu, chosen) {
            return b;
        }
    }
}

/// Between 1 and `max_nu` factors whose orders multiply to at most
/// `max_product_order`, each at least one vertex.
pub fn factor_set<R: Rng + ?Sized>(rng: &mut R, max_nu: usize, max_product_order: usize) -> Vec<SignedGraph> {
    let nu = rng.gen_range(1..=max_nu.max(1));
    let mut budget = max_product_order.max(1);
    let mut factors = Vec::with_capacity(nu);
    for i in 0..nu {
        // leave at least one vertex per remaining factor
        let remaining = nu - i - 1;
        let cap = (budget / 2usize.pow(remaining as u32)).clamp(1, 6);
        let n = rng.gen_range(1..=cap);
        budget /= n;
        let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
        factors.push(signed_gnp(rng, n, p));
    }
    factors
}

/// Uniform random switching vector.
pub fn switching<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Sign> {
    (0..n).map(|_| random_sign(rng)).collect()
}
