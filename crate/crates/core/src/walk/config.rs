use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::graph::Graph;

pub const DEFAULT_KAPPA: u32 = 20;
pub const DEFAULT_VARIANT: &str = "werw";

/// Increment awarded to an edge each time a walk traverses it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Bonus {
    /// 1/|E|. Kept symbolic so that ω = (1 + count)/|E| is computed exactly.
    PerEdge,
    Fixed(f64),
}

impl Bonus {
    pub fn value(self, edge_count: usize) -> f64 {
        match self {
            Bonus::PerEdge => 1.0 / edge_count as f64,
            Bonus::Fixed(b) => b,
        }
    }

    /// Final weight of an edge traversed `count` times: 1/|E| + count·β.
    #[inline]
    pub fn omega(self, count: u64, edge_count: usize) -> f64 {
        match self {
            Bonus::PerEdge => (1 + count) as f64 / edge_count as f64,
            Bonus::Fixed(b) => 1.0 / edge_count as f64 + count as f64 * b,
        }
    }
}

/// Walk parameters as requested by the caller; `rho` and `beta` fall back to
/// |E|−1 and 1/|E| once a graph is known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkConfig {
    pub variant: String,
    pub kappa: u32,
    pub rho: Option<u64>,
    pub beta: Option<f64>,
    pub seed: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig {
            variant: DEFAULT_VARIANT.to_owned(),
            kappa: DEFAULT_KAPPA,
            rho: None,
            beta: None,
            seed: 0,
        }
    }
}

impl WalkConfig {
    pub fn new(variant: &str) -> Self {
        WalkConfig {
            variant: variant.to_owned(),
            ..Default::default()
        }
    }

    pub fn kappa(mut self, kappa: u32) -> Self {
        self.kappa = kappa;
        self
    }

    pub fn rho(mut self, rho: u64) -> Self {
        self.rho = Some(rho);
        self
    }

    pub fn beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Fills in graph-dependent defaults and checks kappa ≥ 1, rho ≥ 1, beta > 0.
    pub fn resolve(&self, g: &Graph) -> Result<ResolvedConfig> {
        if self.kappa == 0 {
            return Err(KpathError::config("kappa must be at least 1"));
        }
        let rho = match self.rho {
            Some(0) => return Err(KpathError::config("rho must be at least 1")),
            Some(r) => r,
            // A single-edge graph would give |E|-1 = 0 iterations.
            None => (g.edge_count() as u64 - 1).max(1),
        };
        let bonus = match self.beta {
            None => Bonus::PerEdge,
            Some(b) if b.is_finite() && b > 0.0 => Bonus::Fixed(b),
            Some(b) => {
                return Err(KpathError::config(format!(
                    "beta must be positive and finite, got {b}"
                )))
            }
        };
        Ok(ResolvedConfig {
            variant: self.variant.clone(),
            kappa: self.kappa,
            rho,
            bonus,
            seed: self.seed,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolvedConfig {
    pub variant: String,
    pub kappa: u32,
    pub rho: u64,
    pub bonus: Bonus,
    pub seed: u64,
}
