//! Bounded self-avoiding random walks (ERW-Kpath and WERW-Kpath).

mod config;
mod engine;
mod state;
mod strategy;

use rand::SeedableRng;

pub use config::{Bonus, ResolvedConfig, WalkConfig, DEFAULT_KAPPA, DEFAULT_VARIANT};
pub use engine::{message_propagation, run_kpath, run_kpath_with, CentralityVector};
pub use state::WalkState;
pub use strategy::{builtin, StrategyRegistry, UniformWalk, WalkStrategy, WeightedWalk};

/// Generator behind every walk. ChaCha8 has a documented, portable stream,
/// so a seed reproduces a run on any platform for a given release.
pub type WalkRng = rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> WalkRng {
    WalkRng::seed_from_u64(seed)
}
