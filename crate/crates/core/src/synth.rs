//! Seeded synthetic graphs for benchmarks and statistical checks.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{KpathError, Result};
use crate::graph::Graph;
use crate::walk::seeded_rng;

/// Uniform random simple graph with exactly `edge_count` edges on
/// `node_count` nodes (rejection sampling of node pairs).
pub fn uniform_random(node_count: usize, edge_count: usize, seed: u64) -> Result<Graph> {
    let max_edges = node_count.saturating_mul(node_count.saturating_sub(1)) / 2;
    if edge_count == 0 || edge_count > max_edges {
        return Err(KpathError::config(format!(
            "cannot place {edge_count} edges on {node_count} nodes"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut seen = HashSet::with_capacity(edge_count);
    let mut pairs = Vec::with_capacity(edge_count);
    while pairs.len() < edge_count {
        let u = rng.gen_range(0..node_count as u32);
        let v = rng.gen_range(0..node_count as u32);
        if u != v && seen.insert((u.min(v), u.max(v))) {
            pairs.push((u, v));
        }
    }
    Graph::from_index_pairs(node_count, &pairs)
}

/// Benchmark graph: |V| = |E|/8.
pub fn bench_graph(edge_count: usize, seed: u64) -> Result<Graph> {
    uniform_random((edge_count / 8).max(2), edge_count, seed)
}

/// Barabási–Albert preferential attachment: a clique on `per_node + 1`
/// nodes, then each new node links to `per_node` distinct existing nodes
/// chosen with probability proportional to degree.
pub fn preferential_attachment(node_count: usize, per_node: usize, seed: u64) -> Result<Graph> {
    if per_node == 0 || node_count <= per_node {
        return Err(KpathError::config("need node_count > per_node >= 1"));
    }
    let mut rng = seeded_rng(seed);
    let mut pairs = Vec::new();
    // Every endpoint occurrence; sampling uniformly from it is degree-proportional.
    let mut stubs: Vec<u32> = Vec::new();
    let core = per_node as u32 + 1;
    for u in 0..core {
        for v in u + 1..core {
            pairs.push((u, v));
            stubs.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(per_node);
    for new in core..node_count as u32 {
        targets.clear();
        while targets.len() < per_node {
            let t = stubs[rng.gen_range(0..stubs.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            pairs.push((new, t));
            stubs.extend([new, t]);
        }
    }
    Graph::from_index_pairs(node_count, &pairs)
}

pub fn path(node_count: usize) -> Result<Graph> {
    let pairs: Vec<(u32, u32)> = (1..node_count as u32).map(|i| (i - 1, i)).collect();
    Graph::from_index_pairs(node_count, &pairs)
}

/// Star with node 0 at the centre.
pub fn star(leaves: usize) -> Result<Graph> {
    let pairs: Vec<(u32, u32)> = (1..=leaves as u32).map(|i| (0, i)).collect();
    Graph::from_index_pairs(leaves + 1, &pairs)
}

pub fn complete(node_count: usize) -> Result<Graph> {
    let n = node_count as u32;
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_index_pairs(node_count, &pairs)
}
