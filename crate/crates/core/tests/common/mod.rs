#![allow(dead_code)]

use equitor::{Partition, SymIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_0f1d_ea00;
pub const CORPUS_SIZE: usize = 200;

/// A fixed pseudo-random corpus: `n ∈ {2,..,5}`, one to three generators,
/// entries at most 4. Zero generators are redrawn so the unit ideal never appears.
pub fn corpus() -> Vec<SymIdeal> {
    corpus_with(CORPUS_SEED, CORPUS_SIZE)
}

pub fn corpus_with(seed: u64, size: usize) -> Vec<SymIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let n = rng.random_range(2..=5usize);
            let count = rng.random_range(1..=3usize);
            let gens = (0..count)
                .map(|_| loop {
                    let raw: Vec<u32> = (0..n).map(|_| rng.random_range(0..=4u32)).collect();
                    if raw.iter().any(|&x| x > 0) {
                        break Partition::sorted_from(raw);
                    }
                })
                .collect();
            SymIdeal::new(n, gens).expect("valid generators")
        })
        .collect()
}

pub fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn example_ideal() -> SymIdeal {
    SymIdeal::new(3, vec![p(&[4, 1, 1]), p(&[5, 2, 0])]).unwrap()
}

pub fn two_variable_ideal() -> SymIdeal {
    SymIdeal::new(2, vec![p(&[5, 1]), p(&[2, 2])]).unwrap()
}
