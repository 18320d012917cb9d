//! Deterministic, portable randomness.
//!
//! Every randomized routine in this crate draws from a ChaCha8 generator
//! keyed by an explicit `(seed, stream)` pair. Distinct logical uses take
//! distinct streams, so adding draws to one consumer never perturbs another.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}
