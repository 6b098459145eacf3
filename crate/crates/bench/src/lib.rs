//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use raag::catalog::random_graph;
use raag::{Letter, SimplicialGraph, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn graph(n: usize, p: f64, seed: u64) -> SimplicialGraph {
    random_graph(n, p, &mut rng(seed))
}

pub fn word(n: usize, len: usize, seed: u64) -> Word {
    let mut rng = rng(seed);
    Word::new(
        (0..len)
            .map(|_| {
                let v = rng.gen_range(0..n);
                if rng.gen_bool(0.5) {
                    Letter::pos(v)
                } else {
                    Letter::neg(v)
                }
            })
            .collect(),
    )
}
