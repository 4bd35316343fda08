//! Seeded random streams.
//!
//! Every stochastic quantity is drawn from a ChaCha8 stream whose 256-bit key
//! is derived from a master seed and a tuple of labels (experiment tag,
//! dimension, sample size, trial index, ...). ChaCha is a counter-mode cipher,
//! so streams are independent of one another, of the platform, and of the
//! order in which parallel workers consume them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Opens the stream identified by `master` and `labels`.
pub fn stream(master: u64, labels: &[u64]) -> ChaCha8Rng {
    let mut state = mix(master ^ 0x9e37_79b9_7f4a_7c15);
    for &label in labels {
        state = mix(state ^ mix(label.wrapping_add(0x9e37_79b9_7f4a_7c15)));
    }
    let mut key = [0u8; 32];
    for (i, chunk) in key.chunks_exact_mut(8).enumerate() {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        chunk.copy_from_slice(&mix(state ^ i as u64).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Fills a row-major `count × dim` buffer with Unif[0,1) draws.
pub fn uniform_rows<R: Rng>(rng: &mut R, count: usize, dim: usize) -> Vec<f64> {
    (0..count * dim).map(|_| rng.random::<f64>()).collect()
}

/// Stable 64-bit label for a short ASCII tag.
pub fn tag(name: &str) -> u64 {
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}
