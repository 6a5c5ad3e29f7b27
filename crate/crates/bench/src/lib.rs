//! Fixtures shared by the benchmarks.

use varikon::varikon::{ReachableSampler, VarikonConfig};

/// `n` reachable configurations drawn with a fixed seed.
pub fn sample_configs(n: usize, seed: u64) -> Vec<VarikonConfig> {
    let mut sampler = ReachableSampler::new(seed);
    (0..n).map(|_| sampler.sample()).collect()
}
