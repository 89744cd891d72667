use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{EdgeId, Graph, NodeId};
use crate::walk::config::{ResolvedConfig, WalkConfig};
use crate::walk::state::WalkState;
use crate::walk::strategy::{builtin, WalkStrategy};
use crate::walk::{seeded_rng, WalkRng};

/// Per-edge traversal totals of one run. Counts are the stored truth; ω is
/// derived from them on demand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityVector {
    pub counts: Vec<u64>,
    pub config: ResolvedConfig,
    pub node_count: usize,
    pub edge_count: usize,
    pub fingerprint: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CentralityVector {
    #[inline]
    pub fn omega(&self, e: EdgeId) -> f64 {
        self.config
            .bonus
            .omega(self.counts[e.index()], self.edge_count)
    }

    pub fn omegas(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| self.config.bonus.omega(c, self.edge_count))
            .collect()
    }

    pub fn total_traversals(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Runs one bounded self-avoiding walk from `start` and leaves its edges in
/// `state.current_walk()`. Flags stay set until [`WalkState::clear_walk`].
pub(crate) fn propagate(
    g: &Graph,
    state: &mut WalkState,
    start: NodeId,
    kappa: u32,
    strategy: &dyn WalkStrategy,
    rng: &mut WalkRng,
) {
    let mut at = start;
    while state.walk_length() < kappa as usize {
        let Some(step) = strategy.select_next_edge(g, at, state, rng) else {
            break;
        };
        state.traverse(step.edge);
        at = step.neighbor;
    }
}

/// One message propagation: a walk of at most `kappa` edges starting at
/// `start`. Returns the traversed edges in order; flags are cleared again
/// before returning, counts keep their awards.
pub fn message_propagation(
    g: &Graph,
    state: &mut WalkState,
    start: NodeId,
    kappa: u32,
    strategy: &dyn WalkStrategy,
    rng: &mut WalkRng,
) -> Vec<EdgeId> {
    state.clear_walk();
    propagate(g, state, start, kappa, strategy, rng);
    let walk = state.current_walk().to_vec();
    state.clear_walk();
    walk
}

/// Runs the variant named in `cfg` from the built-in registry.
pub fn run_kpath(g: &Graph, cfg: &WalkConfig) -> Result<CentralityVector> {
    let strategy = builtin().get(&cfg.variant)?;
    run_kpath_with(g, cfg, strategy.as_ref())
}

/// ρ iterations of: pick a source, clear flags, propagate.
pub fn run_kpath_with(
    g: &Graph,
    cfg: &WalkConfig,
    strategy: &dyn WalkStrategy,
) -> Result<CentralityVector> {
    let mut resolved = cfg.resolve(g)?;
    resolved.variant = strategy.name().to_owned();
    let started = Instant::now();
    let mut rng = seeded_rng(resolved.seed);
    let mut state = WalkState::new(g, resolved.bonus);
    for _ in 0..resolved.rho {
        let source = strategy.select_source(g, &mut rng);
        state.clear_walk();
        propagate(g, &mut state, source, resolved.kappa, strategy, &mut rng);
    }
    state.clear_walk();
    let elapsed = started.elapsed();
    Ok(CentralityVector {
        counts: state.into_counts(),
        config: resolved,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        fingerprint: g.fingerprint().to_owned(),
        elapsed,
    })
}
