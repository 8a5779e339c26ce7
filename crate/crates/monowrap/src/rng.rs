//! Seed derivation for reproducible experiments.
//!
//! Every random stream in the crate is a `ChaCha8Rng`, whose output is
//! stable across platforms and releases. Worker pools hand each task a
//! stream derived from `(master seed, path of indices)`, so results do
//! not depend on scheduling or worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer; decorrelates consecutive inputs.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Fold a path of indices into the master seed, one mixing round each.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut state = mix(master);
    for (depth, part) in path.iter().enumerate() {
        state = mix(state ^ part.wrapping_add(mix(depth as u64 + 1)));
    }
    state
}

/// A ChaCha8 stream for the given derivation path.
pub fn derive_rng(master: u64, path: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derivation_is_deterministic_and_path_sensitive() {
        assert_eq!(derive_seed(1, &[2, 3]), derive_seed(1, &[2, 3]));
        assert_ne!(derive_seed(1, &[2, 3]), derive_seed(1, &[3, 2]));
        assert_ne!(derive_seed(1, &[2]), derive_seed(2, &[2]));
        assert_ne!(derive_seed(1, &[]), derive_seed(1, &[0]));
    }

    #[test]
    fn derived_streams_reproduce() {
        let a: Vec<u64> = (0..4).map(|_| derive_rng(9, &[1, 7]).random()).collect();
        let b: Vec<u64> = (0..4).map(|_| derive_rng(9, &[1, 7]).random()).collect();
        assert_eq!(a, b);
    }
}
