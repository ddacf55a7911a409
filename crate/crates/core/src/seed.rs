//! Deterministic seed splitting.
//!
//! Every random choice is a function of the master seed, a purpose label and
//! an index: `derive` hashes the three with SHA-256 and keeps the first eight
//! bytes (little endian). Integer draws come from ChaCha8 seeded with the
//! derived value, so results are identical across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub fn derive(seed: u64, label: &str, index: u64) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    h.update([0u8]);
    h.update(index.to_le_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

/// `count` integers drawn uniformly from `[-bound, bound] \ {0}`.
pub fn nonzero_integers(seed: u64, count: usize, bound: u32) -> Vec<i64> {
    let bound = i64::from(bound.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..2 * bound);
            if k < bound {
                k - bound
            } else {
                k - bound + 1
            }
        })
        .collect()
}
