use crate::graph::{EdgeId, Graph};
use crate::walk::config::Bonus;

/// Mutable per-run state: traversal totals plus the per-walk T(e) flags.
///
/// Flags set during a walk are remembered in an undo list, so clearing them
/// costs O(walk length) instead of O(|E|).
#[derive(Debug, Clone)]
pub struct WalkState {
    counts: Vec<u64>,
    traversed: Vec<bool>,
    undo: Vec<EdgeId>,
    edge_count: usize,
    bonus: Bonus,
}

impl WalkState {
    pub fn new(g: &Graph, bonus: Bonus) -> Self {
        let m = g.edge_count();
        WalkState {
            counts: vec![0; m],
            traversed: vec![false; m],
            undo: Vec::new(),
            edge_count: m,
            bonus,
        }
    }

    #[inline]
    pub fn is_traversed(&self, e: EdgeId) -> bool {
        self.traversed[e.index()]
    }

    /// Awards the bonus to `e` and flags it for the rest of this walk.
    #[inline]
    pub fn traverse(&mut self, e: EdgeId) {
        debug_assert!(
            !self.traversed[e.index()],
            "edge {e} traversed twice in one walk"
        );
        self.counts[e.index()] += 1;
        self.traversed[e.index()] = true;
        self.undo.push(e);
    }

    /// Edges traversed by the current walk, in order.
    pub fn current_walk(&self) -> &[EdgeId] {
        &self.undo
    }

    /// N, the length of the current walk.
    pub fn walk_length(&self) -> usize {
        self.undo.len()
    }

    pub fn clear_walk(&mut self) {
        for e in self.undo.drain(..) {
            self.traversed[e.index()] = false;
        }
    }

    #[inline]
    pub fn count(&self, e: EdgeId) -> u64 {
        self.counts[e.index()]
    }

    /// Current weight ω(e) = 1/|E| + count(e)·β.
    #[inline]
    pub fn weight(&self, e: EdgeId) -> f64 {
        self.bonus.omega(self.counts[e.index()], self.edge_count)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.counts
    }

    pub fn flags_clear(&self) -> bool {
        self.undo.is_empty() && !self.traversed.iter().any(|&t| t)
    }
}
