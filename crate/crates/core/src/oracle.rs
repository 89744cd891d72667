//! Exact κ-path edge centrality for small graphs.
//!
//! For each source `s` the walk's branching process is expanded completely:
//! every node of the tree is a partial walk, every branch is one admissible
//! untraversed edge weighted as the samplers weight it, and every leaf is a
//! walk that either reached κ edges or got stuck. The mass flowing through a
//! branch is added to that branch's edge, which yields P(e, s), the
//! probability that a walk from `s` uses `e`. Summing over sources gives
//! L^κ(e).
//!
//! Walks are the maximal walks the algorithm generates, not every prefix of
//! them, so an edge is counted at most once per walk.
//!
//! This module only reads the graph's incidence lists; it shares no code
//! with the samplers in [`crate::walk`].

use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::graph::{EdgeId, Graph, NodeId};
use crate::walk::Bonus;

pub const MAX_ORACLE_NODES: usize = 12;
pub const MAX_ORACLE_KAPPA: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleVariant {
    /// Uniform sources, uniform edges.
    Erw,
    /// Degree-proportional sources; edges weighted by their initial, uniform
    /// weight 1/|E|. The real weighted walk evolves its weights across
    /// iterations and has no tractable exact form.
    WerwFrozen,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub variant: OracleVariant,
    pub kappa: u32,
    pub node_count: usize,
    pub edge_count: usize,
    /// `per_source_edge_prob[s][e]` = P(e, s).
    pub per_source_edge_prob: Vec<Vec<f64>>,
    /// L^κ(e) = Σ_s P(e, s).
    pub centrality: Vec<f64>,
    /// Total probability of the leaves of each source's tree; 1 up to rounding.
    pub leaf_mass: Vec<f64>,
    pub source_probability: Vec<f64>,
    pub rho: Option<u64>,
    pub predicted_mean_omega: Option<Vec<f64>>,
}

fn check_guard(g: &Graph, kappa: u32) -> Result<()> {
    if kappa == 0 {
        return Err(KpathError::config("kappa must be at least 1"));
    }
    if g.node_count() > MAX_ORACLE_NODES {
        return Err(KpathError::OracleSizeLimit(format!(
            "{} nodes exceeds the limit of {MAX_ORACLE_NODES}",
            g.node_count()
        )));
    }
    if kappa > MAX_ORACLE_KAPPA {
        return Err(KpathError::OracleSizeLimit(format!(
            "kappa {kappa} exceeds the limit of {MAX_ORACLE_KAPPA}"
        )));
    }
    Ok(())
}

/// P(s) for each node: 1/|V| for ERW, deg(s)/2|E| for the weighted walk.
pub fn source_probabilities(g: &Graph, variant: OracleVariant) -> Vec<f64> {
    match variant {
        OracleVariant::Erw => vec![1.0 / g.node_count() as f64; g.node_count()],
        OracleVariant::WerwFrozen => {
            let delta: Vec<f64> = g.nodes().map(|v| g.normalized_degree(v)).collect();
            let total: f64 = delta.iter().sum();
            delta.iter().map(|d| d / total).collect()
        }
    }
}

struct Expansion<'a> {
    g: &'a Graph,
    weights: &'a [f64],
    kappa: u32,
    traversed: Vec<bool>,
    edge_prob: Vec<f64>,
    leaf_mass: f64,
}

impl Expansion<'_> {
    fn expand(&mut self, at: NodeId, depth: u32, mass: f64) {
        let g = self.g;
        if depth == self.kappa {
            self.leaf_mass += mass;
            return;
        }
        let total: f64 = g
            .incident(at)
            .iter()
            .filter(|i| !self.traversed[i.edge.index()])
            .map(|i| self.weights[i.edge.index()])
            .sum();
        if total == 0.0 {
            self.leaf_mass += mass;
            return;
        }
        for inc in g.incident(at) {
            let e = inc.edge.index();
            if self.traversed[e] {
                continue;
            }
            let branch = mass * self.weights[e] / total;
            self.edge_prob[e] += branch;
            self.traversed[e] = true;
            self.expand(inc.neighbor, depth + 1, branch);
            self.traversed[e] = false;
        }
    }
}

/// P(e, s) for every source and edge, with branches weighted by fixed edge
/// weights `weights` (uniform weights reproduce the unweighted case).
pub fn selection_probabilities_with_weights(
    g: &Graph,
    kappa: u32,
    weights: &[f64],
) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    check_guard(g, kappa)?;
    if weights.len() != g.edge_count() || weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(KpathError::config(
            "oracle weights must be positive, one per edge",
        ));
    }
    let mut per_source = Vec::with_capacity(g.node_count());
    let mut leaf_mass = Vec::with_capacity(g.node_count());
    for s in g.nodes() {
        let mut x = Expansion {
            g,
            weights,
            kappa,
            traversed: vec![false; g.edge_count()],
            edge_prob: vec![0.0; g.edge_count()],
            leaf_mass: 0.0,
        };
        x.expand(s, 0, 1.0);
        per_source.push(x.edge_prob);
        leaf_mass.push(x.leaf_mass);
    }
    Ok((per_source, leaf_mass))
}

pub fn exact_selection_probabilities(
    g: &Graph,
    kappa: u32,
    variant: OracleVariant,
) -> Result<OracleResult> {
    let weights = vec![g.initial_edge_weight(); g.edge_count()];
    let (per_source, leaf_mass) = selection_probabilities_with_weights(g, kappa, &weights)?;
    let mut centrality = vec![0.0; g.edge_count()];
    for row in &per_source {
        for (l, p) in centrality.iter_mut().zip(row) {
            *l += p;
        }
    }
    Ok(OracleResult {
        variant,
        kappa,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        per_source_edge_prob: per_source,
        centrality,
        leaf_mass,
        source_probability: source_probabilities(g, variant),
        rho: None,
        predicted_mean_omega: None,
    })
}

pub fn exact_centrality(g: &Graph, kappa: u32, variant: OracleVariant) -> Result<Vec<f64>> {
    Ok(exact_selection_probabilities(g, kappa, variant)?.centrality)
}

/// Expected ERW weight after `rho` iterations:
/// 1/|E| + ρ·β·L^κ(e)/|V|, which with β = 1/|E| is 1/|E| + ρ/(|E||V|)·L^κ(e).
pub fn predicted_mean_omega_from(
    centrality: &[f64],
    node_count: usize,
    edge_count: usize,
    rho: u64,
    bonus: Bonus,
) -> Vec<f64> {
    let base = 1.0 / edge_count as f64;
    let scale = rho as f64 * bonus.value(edge_count) / node_count as f64;
    centrality.iter().map(|l| base + scale * l).collect()
}

pub fn predicted_mean_omega(g: &Graph, kappa: u32, rho: u64, bonus: Bonus) -> Result<Vec<f64>> {
    let l = exact_centrality(g, kappa, OracleVariant::Erw)?;
    Ok(predicted_mean_omega_from(
        &l,
        g.node_count(),
        g.edge_count(),
        rho,
        bonus,
    ))
}

impl OracleResult {
    /// Attaches the ERW prediction for `rho` iterations.
    pub fn with_prediction(mut self, rho: u64, bonus: Bonus) -> Self {
        self.rho = Some(rho);
        self.predicted_mean_omega = Some(predicted_mean_omega_from(
            &self.centrality,
            self.node_count,
            self.edge_count,
            rho,
            bonus,
        ));
        self
    }

    /// Per-iteration probability that an ERW walk uses `e`: L^κ(e)/|V|.
    pub fn mean_selection_probability(&self, e: EdgeId) -> f64 {
        self.centrality[e.index()] / self.node_count as f64
    }
}

/// Weighted-walk bounds per edge, `(ξ′L + 1/|E|, ξ″L + 1/|E|)` with
/// ξ′ = ρ·min_s P(s)/|E| and ξ″ = ρ·max_s P(s)/|E|, using frozen weights.
pub fn werw_bounds(g: &Graph, kappa: u32, rho: u64) -> Result<Vec<(f64, f64)>> {
    let oracle = exact_selection_probabilities(g, kappa, OracleVariant::WerwFrozen)?;
    let m = g.edge_count() as f64;
    let p = &oracle.source_probability;
    let min_p = p.iter().copied().fold(f64::INFINITY, f64::min);
    let max_p = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let xi_lo = rho as f64 * min_p / m;
    let xi_hi = rho as f64 * max_p / m;
    Ok(oracle
        .centrality
        .iter()
        .map(|l| (xi_lo * l + 1.0 / m, xi_hi * l + 1.0 / m))
        .collect())
}

/// Checks each measured mean weight against [`werw_bounds`], widened by
/// `slack[e]` on both sides to absorb Monte-Carlo error.
pub fn werw_bound_check(
    g: &Graph,
    kappa: u32,
    rho: u64,
    mean_omega: &[f64],
    slack: &[f64],
) -> Result<Vec<bool>> {
    if mean_omega.len() != g.edge_count() || slack.len() != g.edge_count() {
        return Err(KpathError::MismatchedEdgeSets(format!(
            "expected {} values per edge",
            g.edge_count()
        )));
    }
    let bounds = werw_bounds(g, kappa, rho)?;
    Ok(bounds
        .iter()
        .zip(mean_omega)
        .zip(slack)
        .map(|(((lo, hi), w), s)| *w >= lo - s && *w <= hi + s)
        .collect())
}
