//! Pairwise comparisons between two centrality vectors over the same edges.

use crate::error::{KpathError, Result};

fn same_len(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(KpathError::MismatchedEdgeSets(format!(
            "{} vs {} edges",
            x.len(),
            y.len()
        )));
    }
    if x.is_empty() {
        return Err(KpathError::MismatchedEdgeSets(
            "empty centrality vectors".into(),
        ));
    }
    Ok(())
}

fn max_of(x: &[f64]) -> f64 {
    x.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Λ(e): absolute gap between the max-normalized values of each edge.
pub fn lambda(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    same_len(x, y)?;
    let (mx, my) = (max_of(x), max_of(y));
    if !(mx > 0.0 && my > 0.0) {
        return Err(KpathError::DegenerateDistribution(
            "maximum weight must be positive",
        ));
    }
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (a / mx - b / my).abs())
        .collect())
}

/// Modified Jaccard J^τ: fraction of edges with Λ(e) ≤ τ. Both vectors
/// cover the same edge set, so the union is just |E|.
pub fn modified_jaccard(x: &[f64], y: &[f64], tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(KpathError::config(format!(
            "tau must lie in (0, 1], got {tau}"
        )));
    }
    let gaps = lambda(x, y)?;
    Ok(jaccard_from_lambda(&gaps, tau))
}

pub(crate) fn jaccard_from_lambda(gaps: &[f64], tau: f64) -> f64 {
    gaps.iter().filter(|&&l| l <= tau).count() as f64 / gaps.len() as f64
}

fn is_constant(x: &[f64]) -> bool {
    x.iter().all(|&v| v == x[0])
}

pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    same_len(x, y)?;
    // The float mean of a constant vector can miss the value by an ulp,
    // which would leave a tiny nonzero variance.
    if is_constant(x) || is_constant(y) {
        return Err(KpathError::DegenerateDistribution("zero variance"));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(KpathError::DegenerateDistribution("zero variance"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

pub fn euclidean(x: &[f64], y: &[f64]) -> Result<f64> {
    same_len(x, y)?;
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

/// L2 divided by the number of edges.
pub fn average_distance(l2: f64, edge_count: usize) -> f64 {
    l2 / edge_count as f64
}

pub fn avg_euclidean(x: &[f64], y: &[f64]) -> Result<f64> {
    Ok(average_distance(euclidean(x, y)?, x.len()))
}

/// 1-based ranks in ascending order of value; tied values share the mean
/// of the ranks they span.
pub fn average_ranks(x: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut ranks = vec![0.0; x.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && x[order[j + 1]] == x[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman rank correlation: Pearson over average ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    same_len(x, y)?;
    pearson(&average_ranks(x), &average_ranks(y))
}
