//! Immutable undirected simple graph.
//!
//! Nodes and edges carry dense ids assigned in first-appearance order.
//! Incidence lists are stored in CSR form and each list is sorted by
//! [`EdgeId`], which fixes the scan order every sampler relies on for
//! reproducibility. The original node labels are kept alongside.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{KpathError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One entry of a node's incidence list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub edge: EdgeId,
    pub neighbor: NodeId,
}

/// Counters describing what [`GraphBuilder`] discarded while cleaning input.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningStats {
    pub pairs_seen: u64,
    pub self_loops_dropped: u64,
    /// Exact repeats of an already seen `(u, v)` pair.
    pub duplicates_collapsed: u64,
    /// `(v, u)` pairs whose reverse `(u, v)` was already present.
    pub reciprocal_collapsed: u64,
}

/// Accumulates labelled pairs and produces a [`Graph`].
///
/// Self-loops are discarded before their labels are interned, so a label
/// that only ever appears in a self-loop does not become a node.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    endpoints: Vec<(NodeId, NodeId)>,
    seen: HashMap<(NodeId, NodeId), EdgeId>,
    stats: CleaningStats,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label` and returns its id. Adding a node that never gets an
    /// edge leaves it isolated in the final graph.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    /// Returns the id of the new edge, or `None` when the pair was a
    /// self-loop or collapsed into an existing edge.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Option<EdgeId> {
        self.stats.pairs_seen += 1;
        if a == b {
            self.stats.self_loops_dropped += 1;
            return None;
        }
        let u = self.add_node(a);
        let v = self.add_node(b);
        self.insert(u, v)
    }

    fn insert(&mut self, u: NodeId, v: NodeId) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        if let Some(&existing) = self.seen.get(&key) {
            if self.endpoints[existing.index()] == (u, v) {
                self.stats.duplicates_collapsed += 1;
            } else {
                self.stats.reciprocal_collapsed += 1;
            }
            return None;
        }
        let id = EdgeId(self.endpoints.len() as u32);
        self.endpoints.push((u, v));
        self.seen.insert(key, id);
        Some(id)
    }

    pub fn stats(&self) -> CleaningStats {
        self.stats
    }

    pub fn build(self) -> Result<Graph> {
        if self.endpoints.is_empty() {
            return Err(KpathError::EmptyGraph);
        }
        Ok(Graph::from_parts(self.labels, self.index, self.endpoints))
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    endpoints: Vec<(NodeId, NodeId)>,
    offsets: Vec<usize>,
    incidence: Vec<Incidence>,
    /// `degree_prefix[v]` is the sum of degrees of nodes `0..v`; length |V|+1.
    degree_prefix: Vec<u64>,
    fingerprint: String,
}

/// Builds a graph from labelled pairs, dropping self-loops and collapsing
/// duplicate or reciprocal pairs into one undirected edge.
pub fn build_graph<I, A, B>(pairs: I) -> Result<Graph>
where
    I: IntoIterator<Item = (A, B)>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let mut builder = GraphBuilder::new();
    for (a, b) in pairs {
        builder.add_edge(a.as_ref(), b.as_ref());
    }
    builder.build()
}

impl Graph {
    /// Graph on nodes `0..node_count` labelled by their decimal index.
    /// Nodes not touched by any pair stay isolated.
    pub fn from_index_pairs(node_count: usize, pairs: &[(u32, u32)]) -> Result<Graph> {
        let mut builder = GraphBuilder::new();
        for v in 0..node_count {
            builder.add_node(&v.to_string());
        }
        for &(u, v) in pairs {
            if u as usize >= node_count || v as usize >= node_count {
                return Err(KpathError::config(format!(
                    "pair ({u}, {v}) out of range for {node_count} nodes"
                )));
            }
            builder.stats.pairs_seen += 1;
            if u == v {
                builder.stats.self_loops_dropped += 1;
                continue;
            }
            builder.insert(NodeId(u), NodeId(v));
        }
        builder.build()
    }

    fn from_parts(
        labels: Vec<String>,
        label_index: HashMap<String, NodeId>,
        endpoints: Vec<(NodeId, NodeId)>,
    ) -> Graph {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in &endpoints {
            degree[u.index()] += 1;
            degree[v.index()] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let placeholder = Incidence {
            edge: EdgeId(0),
            neighbor: NodeId(0),
        };
        let mut incidence = vec![placeholder; 2 * endpoints.len()];
        // Edges are visited in id order, so each list ends up sorted by EdgeId.
        for (i, &(u, v)) in endpoints.iter().enumerate() {
            let edge = EdgeId(i as u32);
            incidence[cursor[u.index()]] = Incidence { edge, neighbor: v };
            cursor[u.index()] += 1;
            incidence[cursor[v.index()]] = Incidence { edge, neighbor: u };
            cursor[v.index()] += 1;
        }
        let degree_prefix = offsets.iter().map(|&o| o as u64).collect();

        let mut hasher = Sha256::new();
        hasher.update((n as u64).to_le_bytes());
        for label in &labels {
            hasher.update((label.len() as u64).to_le_bytes());
            hasher.update(label.as_bytes());
        }
        for &(u, v) in &endpoints {
            hasher.update(u.0.to_le_bytes());
            hasher.update(v.0.to_le_bytes());
        }
        let digest = hasher.finalize();
        let fingerprint = digest[..8].iter().map(|b| format!("{b:02x}")).collect();

        Graph {
            labels,
            label_index,
            endpoints,
            offsets,
            incidence,
            degree_prefix,
            fingerprint,
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.node_count() as u32).map(NodeId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edge_count() as u32).map(EdgeId)
    }

    /// Endpoints in the orientation they were first seen.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        self.endpoints[e.index()]
    }

    #[inline]
    pub fn incident(&self, v: NodeId) -> &[Incidence] {
        &self.incidence[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    pub fn degree_prefix(&self) -> &[u64] {
        &self.degree_prefix
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.index()]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.label_index.get(label).copied()
    }

    /// Looks up the edge joining two labelled nodes in either orientation.
    pub fn edge_between(&self, a: &str, b: &str) -> Option<EdgeId> {
        let u = self.node_by_label(a)?;
        let v = self.node_by_label(b)?;
        self.incident(u)
            .iter()
            .find(|i| i.neighbor == v)
            .map(|i| i.edge)
    }

    /// |I(v)| / |V|.
    pub fn normalized_degree(&self, v: NodeId) -> f64 {
        self.degree(v) as f64 / self.node_count() as f64
    }

    /// The weight every edge starts from: 1/|E|.
    pub fn initial_edge_weight(&self) -> f64 {
        1.0 / self.edge_count() as f64
    }

    /// Hex digest of the labels and the ordered endpoint list.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// The cleaned edge list as label pairs, in EdgeId order.
    pub fn label_pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.endpoints
            .iter()
            .map(|&(u, v)| (self.label(u), self.label(v)))
    }
}
