//! Experiment runners, output writers and the command-line front end.

pub mod cli;
pub mod drift;
pub mod monitor_suite;
pub mod ood;
pub mod plot;
pub mod worldmodel_trials;

/// Seed of trial `k` of an experiment, derived from the run seed.
pub fn trial_seed(seed: u64, experiment: &str, k: usize) -> u64 {
    // FNV-1a over the tag keeps seeds stable across builds
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in experiment.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ h ^ (k as u64).wrapping_mul(0xd1b5_4a32_d192_ed03)
}
