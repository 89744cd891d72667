use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::graph::EdgeId;

/// Edges whose weight is strictly greater than `threshold`.
pub fn strong_edge_filter(x: &[f64], threshold: f64) -> Vec<EdgeId> {
    x.iter()
        .enumerate()
        .filter(|(_, &w)| w > threshold)
        .map(|(i, _)| EdgeId(i as u32))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Binning {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub binning: Binning,
    /// `bins + 1` boundaries; bin `i` is `[edges[i], edges[i+1])`, the last
    /// bin also includes its upper boundary.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub probabilities: Vec<f64>,
}

/// Empirical distribution of the values in `x`. A constant vector lands
/// entirely in the first bin.
pub fn histogram(x: &[f64], bins: usize, binning: Binning) -> Result<Histogram> {
    if bins == 0 {
        return Err(KpathError::config("bins must be at least 1"));
    }
    if x.is_empty() {
        return Err(KpathError::config("cannot bin an empty vector"));
    }
    let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if binning == Binning::Log && lo <= 0.0 {
        return Err(KpathError::config(
            "log binning needs strictly positive values",
        ));
    }
    let (a, b) = match binning {
        Binning::Linear => (lo, hi),
        Binning::Log => (lo.ln(), hi.ln()),
    };
    let width = (b - a) / bins as f64;
    let edges: Vec<f64> = (0..=bins)
        .map(|i| {
            let t = if i == bins { b } else { a + width * i as f64 };
            match binning {
                Binning::Linear => t,
                Binning::Log => t.exp(),
            }
        })
        .collect();
    let mut counts = vec![0u64; bins];
    for &v in x {
        let t = match binning {
            Binning::Linear => v,
            Binning::Log => v.ln(),
        };
        let idx = if width > 0.0 {
            (((t - a) / width) as usize).min(bins - 1)
        } else {
            0
        };
        counts[idx] += 1;
    }
    let n = x.len() as f64;
    let probabilities = counts.iter().map(|&c| c as f64 / n).collect();
    Ok(Histogram {
        binning,
        edges,
        counts,
        probabilities,
    })
}

/// `(rank, value)` pairs, rank 1 being the largest value.
pub fn rank_plot(x: &[f64]) -> Vec<(usize, f64)> {
    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, v)| (i + 1, v))
        .collect()
}

/// Least-squares slope of ln(value) against ln(rank). `None` for fewer than
/// two points or a non-positive value.
pub fn loglog_slope(points: &[(usize, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(_, v)| v <= 0.0) {
        return None;
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|&(r, _)| (r as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, v)| v.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}
