use serde::{Deserialize, Serialize};

use crate::error::{KpathError, Result};
use crate::metrics::similarity::{
    average_distance, euclidean, jaccard_from_lambda, lambda, pearson, spearman,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrelationStatus {
    Ok,
    /// Bit-identical inputs; reported as 1 by convention.
    IdenticalInputs,
    /// A constant input with nothing to correlate; no value reported.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauValue {
    pub tau: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairComparison {
    pub left: String,
    pub right: String,
    pub jaccard: Vec<TauValue>,
    pub pearson: Option<f64>,
    pub pearson_status: CorrelationStatus,
    pub spearman: Option<f64>,
    pub spearman_status: CorrelationStatus,
    pub l2: f64,
    pub avg_l2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanComparison {
    pub pairs: usize,
    pub jaccard: Vec<TauValue>,
    /// Mean over the pairs that produced a value.
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    pub l2: f64,
    pub avg_l2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub run_ids: Vec<String>,
    pub edge_count: usize,
    pub taus: Vec<f64>,
    pub pairs: Vec<PairComparison>,
    pub mean: Option<MeanComparison>,
}

fn correlate(
    x: &[f64],
    y: &[f64],
    f: fn(&[f64], &[f64]) -> Result<f64>,
) -> Result<(Option<f64>, CorrelationStatus)> {
    match f(x, y) {
        Ok(r) => Ok((Some(r), CorrelationStatus::Ok)),
        Err(KpathError::DegenerateDistribution(_)) if x == y => {
            Ok((Some(1.0), CorrelationStatus::IdenticalInputs))
        }
        Err(KpathError::DegenerateDistribution(_)) => Ok((None, CorrelationStatus::Degenerate)),
        Err(e) => Err(e),
    }
}

pub fn compare_pair(
    left: &str,
    right: &str,
    x: &[f64],
    y: &[f64],
    taus: &[f64],
) -> Result<PairComparison> {
    let gaps = lambda(x, y)?;
    let jaccard = taus
        .iter()
        .map(|&tau| TauValue {
            tau,
            value: jaccard_from_lambda(&gaps, tau),
        })
        .collect();
    let (pearson, pearson_status) = correlate(x, y, pearson)?;
    let (spearman, spearman_status) = correlate(x, y, spearman)?;
    let l2 = euclidean(x, y)?;
    Ok(PairComparison {
        left: left.to_owned(),
        right: right.to_owned(),
        jaccard,
        pearson,
        pearson_status,
        spearman,
        spearman_status,
        l2,
        avg_l2: average_distance(l2, x.len()),
    })
}

fn mean_of(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    (n > 0).then(|| sum / n as f64)
}

impl RobustnessReport {
    /// All C(n, 2) pairwise comparisons of `runs` plus their averages.
    /// Taus are sorted ascending and must lie in (0, 1].
    pub fn from_runs(run_ids: &[String], runs: &[Vec<f64>], taus: &[f64]) -> Result<Self> {
        if run_ids.len() != runs.len() {
            return Err(KpathError::config("one id per run required"));
        }
        let mut taus = taus.to_vec();
        if let Some(bad) = taus.iter().find(|&&t| !(t > 0.0 && t <= 1.0)) {
            return Err(KpathError::config(format!(
                "tau must lie in (0, 1], got {bad}"
            )));
        }
        taus.sort_by(f64::total_cmp);
        taus.dedup();
        let edge_count = runs.first().map_or(0, Vec::len);
        if runs.iter().any(|r| r.len() != edge_count) {
            return Err(KpathError::MismatchedEdgeSets(
                "runs differ in edge count".into(),
            ));
        }

        let mut pairs = Vec::new();
        for i in 0..runs.len() {
            for j in i + 1..runs.len() {
                pairs.push(compare_pair(
                    &run_ids[i],
                    &run_ids[j],
                    &runs[i],
                    &runs[j],
                    &taus,
                )?);
            }
        }
        let mean = (!pairs.is_empty()).then(|| MeanComparison {
            pairs: pairs.len(),
            jaccard: taus
                .iter()
                .enumerate()
                .map(|(k, &tau)| TauValue {
                    tau,
                    value: mean_of(pairs.iter().map(|p| p.jaccard[k].value)).unwrap(),
                })
                .collect(),
            pearson: mean_of(pairs.iter().filter_map(|p| p.pearson)),
            spearman: mean_of(pairs.iter().filter_map(|p| p.spearman)),
            l2: mean_of(pairs.iter().map(|p| p.l2)).unwrap(),
            avg_l2: mean_of(pairs.iter().map(|p| p.avg_l2)).unwrap(),
        });
        Ok(RobustnessReport {
            run_ids: run_ids.to_vec(),
            edge_count,
            taus,
            pairs,
            mean,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("run-{i}")).collect()
    }

    #[test]
    fn single_run_has_no_pairs() {
        let r = RobustnessReport::from_runs(&ids(1), &[vec![0.1, 0.2]], &[0.05]).unwrap();
        assert!(r.pairs.is_empty());
        assert!(r.mean.is_none());
    }

    #[test]
    fn identical_runs() {
        let v = vec![0.25, 0.5, 0.25, 1.0];
        let r = RobustnessReport::from_runs(&ids(2), &[v.clone(), v], &[0.1, 0.01, 0.05]).unwrap();
        assert_eq!(r.taus, vec![0.01, 0.05, 0.1]);
        let p = &r.pairs[0];
        assert!(p.jaccard.iter().all(|j| j.value == 1.0));
        assert_eq!(p.pearson, Some(1.0));
        assert_eq!(p.l2, 0.0);
    }

    #[test]
    fn identical_constant_runs_flagged() {
        let v = vec![0.25; 4];
        let r = RobustnessReport::from_runs(&ids(2), &[v.clone(), v], &[0.05]).unwrap();
        let p = &r.pairs[0];
        assert_eq!(p.pearson, Some(1.0));
        assert_eq!(p.pearson_status, CorrelationStatus::IdenticalInputs);
        assert_eq!(p.spearman_status, CorrelationStatus::IdenticalInputs);
    }

    #[test]
    fn constant_against_varying_is_degenerate() {
        let r =
            RobustnessReport::from_runs(&ids(2), &[vec![0.25; 3], vec![0.1, 0.2, 0.3]], &[0.05])
                .unwrap();
        assert_eq!(r.pairs[0].pearson, None);
        assert_eq!(r.pairs[0].pearson_status, CorrelationStatus::Degenerate);
        assert_eq!(r.mean.as_ref().unwrap().pearson, None);
    }

    #[test]
    fn pair_count_and_avg_identity() {
        let runs = vec![
            vec![0.1, 0.3, 0.2],
            vec![0.2, 0.3, 0.1],
            vec![0.3, 0.1, 0.2],
            vec![0.1, 0.1, 0.3],
        ];
        let r = RobustnessReport::from_runs(&ids(4), &runs, &[0.01, 0.05, 0.1]).unwrap();
        assert_eq!(r.pairs.len(), 6);
        for p in &r.pairs {
            assert_eq!(p.avg_l2, p.l2 / 3.0);
            assert!(p.jaccard.windows(2).all(|w| w[0].value <= w[1].value));
        }
    }
}
