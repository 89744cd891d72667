//! Walk variants and the registry that maps names to them.
//!
//! A variant decides two things: how a walk picks its source node and how it
//! picks the next untraversed edge. Everything else (the iteration loop, the
//! bonus award, flag bookkeeping) is shared in [`crate::walk::engine`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::error::{KpathError, Result};
use crate::graph::{Graph, Incidence, NodeId};
use crate::walk::state::WalkState;
use crate::walk::WalkRng;

pub trait WalkStrategy: Send + Sync + fmt::Debug {
    /// Registry key, also echoed in reports.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn select_source(&self, g: &Graph, rng: &mut WalkRng) -> NodeId;

    /// Samples one untraversed edge incident on `at`, or `None` when every
    /// incident edge is already flagged (or `at` is isolated).
    fn select_next_edge(
        &self,
        g: &Graph,
        at: NodeId,
        state: &WalkState,
        rng: &mut WalkRng,
    ) -> Option<Incidence>;
}

/// Uniform source and uniform edge selection.
#[derive(Debug, Default, Clone, Copy)]
pub struct UniformWalk;

/// Degree-proportional source and weight-proportional edge selection.
#[derive(Debug, Default, Clone, Copy)]
pub struct WeightedWalk;

impl WalkStrategy for UniformWalk {
    fn name(&self) -> &'static str {
        "erw"
    }

    fn description(&self) -> &'static str {
        "ERW-Kpath: uniform source, uniform untraversed edge"
    }

    fn select_source(&self, g: &Graph, rng: &mut WalkRng) -> NodeId {
        NodeId(rng.gen_range(0..g.node_count() as u32))
    }

    fn select_next_edge(
        &self,
        g: &Graph,
        at: NodeId,
        state: &WalkState,
        rng: &mut WalkRng,
    ) -> Option<Incidence> {
        let incident = g.incident(at);
        let open = incident
            .iter()
            .filter(|i| !state.is_traversed(i.edge))
            .count();
        if open == 0 {
            return None;
        }
        let pick = rng.gen_range(0..open);
        incident
            .iter()
            .filter(|i| !state.is_traversed(i.edge))
            .nth(pick)
            .copied()
    }
}

impl WalkStrategy for WeightedWalk {
    fn name(&self) -> &'static str {
        "werw"
    }

    fn description(&self) -> &'static str {
        "WERW-Kpath: degree-proportional source, weight-proportional untraversed edge"
    }

    fn select_source(&self, g: &Graph, rng: &mut WalkRng) -> NodeId {
        let prefix = g.degree_prefix();
        let total = *prefix.last().expect("prefix has |V|+1 entries");
        let r = rng.gen_range(0..total);
        // First node whose cumulative degree exceeds r; isolated nodes have
        // an empty interval and are never returned.
        let idx = prefix[1..].partition_point(|&p| p <= r);
        NodeId(idx as u32)
    }

    fn select_next_edge(
        &self,
        g: &Graph,
        at: NodeId,
        state: &WalkState,
        rng: &mut WalkRng,
    ) -> Option<Incidence> {
        let incident = g.incident(at);
        let mut total = 0.0;
        let mut last_open = None;
        for i in incident {
            if !state.is_traversed(i.edge) {
                total += state.weight(i.edge);
                last_open = Some(*i);
            }
        }
        let last_open = last_open?;
        let target = rng.gen::<f64>() * total;
        let mut acc = 0.0;
        for i in incident {
            if state.is_traversed(i.edge) {
                continue;
            }
            acc += state.weight(i.edge);
            if target < acc {
                return Some(*i);
            }
        }
        // Only reachable through rounding in the running sum.
        Some(last_open)
    }
}

/// Name-indexed collection of walk variants.
#[derive(Debug, Clone, Default)]
pub struct StrategyRegistry {
    entries: BTreeMap<&'static str, Arc<dyn WalkStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(UniformWalk);
        r.register(WeightedWalk);
        r
    }

    /// Adds a variant, replacing any previous one with the same name.
    pub fn register(&mut self, strategy: impl WalkStrategy + 'static) {
        let strategy: Arc<dyn WalkStrategy> = Arc::new(strategy);
        self.entries.insert(strategy.name(), strategy);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn WalkStrategy>> {
        self.entries.get(name).cloned().ok_or_else(|| {
            KpathError::config(format!(
                "unknown variant `{name}` (available: {})",
                self.names().collect::<Vec<_>>().join(", ")
            ))
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

/// The process-wide registry holding the built-in variants.
pub fn builtin() -> &'static StrategyRegistry {
    static REGISTRY: OnceLock<StrategyRegistry> = OnceLock::new();
    REGISTRY.get_or_init(StrategyRegistry::with_builtins)
}
