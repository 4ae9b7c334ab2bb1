//! Deterministic derivation of child seeds from a master seed.
//!
//! Every random decision in the pipeline flows from a named seed in the
//! run config. Sub-tasks (per-round Monte Carlo, per-start sampling,
//! per-permutation Shapley draws) derive independent streams here instead
//! of sharing one RNG, so reordering or parallelizing sub-tasks can never
//! change results.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; good avalanche behavior for seed mixing.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Child seed for a labelled sub-task of `master`.
pub fn child(master: u64, label: &str, index: u64) -> u64 {
    let mut h = master ^ 0x517c_c1b7_2722_0a95;
    for b in label.as_bytes() {
        h = mix(h ^ u64::from(*b));
    }
    mix(h ^ index)
}

/// Seeded RNG for a labelled sub-task.
pub fn rng(master: u64, label: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(child(master, label, index))
}
