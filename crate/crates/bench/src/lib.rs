//! Shared inputs for the benchmarks.

use freeorder::{Letter, Rank, ReducedWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniformly random reduced word of exactly `len` letters, seeded.
pub fn random_reduced(rank: Rank, len: usize, seed: u64) -> ReducedWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Letter> = rank.letters().collect();
    let mut out: Vec<Letter> = Vec::with_capacity(len);
    while out.len() < len {
        let l = all[rng.gen_range(0..all.len())];
        if !out.last().is_some_and(|p| p.cancels(l)) {
            out.push(l);
        }
    }
    ReducedWord::from_reduced(out).expect("built reduced")
}
