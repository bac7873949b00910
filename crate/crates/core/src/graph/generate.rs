//! Seeded random regular graphs via the pairing (configuration) model.
//!
//! Every vertex contributes `delta` stubs; the stubs are shuffled and paired
//! consecutively, and the whole sample is rejected if it contains a loop or
//! a repeated edge. Randomness comes from ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, which is portable across platforms.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Graph, VertexSet};

pub const DEFAULT_RETRY_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("no {delta}-regular graph on {n} vertices (need n*delta even and delta < n)")]
    InfeasibleParameters { n: usize, delta: usize },
    #[error("pairing model produced no simple graph in {attempts} attempts")]
    RetryLimitExceeded { attempts: usize },
}

pub fn random_regular(n: usize, delta: usize, seed: u64) -> Result<Graph, GenerateError> {
    random_regular_with_limit(n, delta, seed, DEFAULT_RETRY_LIMIT)
}

pub fn random_regular_with_limit(
    n: usize,
    delta: usize,
    seed: u64,
    attempts: usize,
) -> Result<Graph, GenerateError> {
    if delta >= n || !(n * delta).is_multiple_of(2) {
        return Err(GenerateError::InfeasibleParameters { n, delta });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, delta)).collect();
    let mut rows = vec![VertexSet::new(n); n];
    'attempt: for _ in 0..attempts {
        stubs.sort_unstable();
        stubs.shuffle(&mut rng);
        rows.iter_mut().for_each(VertexSet::clear);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || rows[a].contains(b) {
                continue 'attempt;
            }
            rows[a].insert(b);
            rows[b].insert(a);
        }
        let edges =
            (0..n).flat_map(|u| rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)));
        return Ok(Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("pairing is simple"));
    }
    Err(GenerateError::RetryLimitExceeded { attempts })
}
