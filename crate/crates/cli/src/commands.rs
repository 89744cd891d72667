use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use kpath_core::io::{
    parse_edge_list, read_centrality_csv, write_centrality_csv, write_report_json,
    CentralityRecord, IngestOptions, ParseReport,
};
use kpath_core::metrics::{
    histogram, loglog_slope, rank_plot, spearman, strong_edge_filter, Binning, Histogram,
    RobustnessReport,
};
use kpath_core::oracle::{self, OracleVariant};
use kpath_core::walk::{run_kpath, Bonus, ResolvedConfig, WalkConfig};
use kpath_core::{Graph, KpathError, Result};
use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{ComputeArgs, OracleArgs, RobustnessArgs, StatsArgs, WalkArgs};

pub fn load_graph(path: &Path) -> Result<(Graph, ParseReport)> {
    let file = fs::File::open(path)?;
    parse_edge_list(io::BufReader::new(file), &IngestOptions::default())
}

pub(crate) fn emit(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub(crate) fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    if jobs == Some(0) {
        return Err(KpathError::config("--jobs must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| KpathError::config(e.to_string()))
}

impl WalkArgs {
    pub fn config(&self) -> WalkConfig {
        WalkConfig {
            variant: self.variant.clone(),
            kappa: self.kappa,
            rho: self.rho,
            beta: self.beta,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeSummary {
    pub config: ResolvedConfig,
    pub node_count: usize,
    pub edge_count: usize,
    pub graph_fingerprint: String,
    pub parse: ParseReport,
    pub total_traversals: u64,
    pub min_omega: f64,
    pub max_omega: f64,
    pub elapsed_seconds: Option<f64>,
}

pub struct ComputeOutput {
    pub csv: String,
    pub summary: ComputeSummary,
}

pub fn compute(
    g: &Graph,
    parse: ParseReport,
    walk: &WalkArgs,
    timing: bool,
) -> Result<ComputeOutput> {
    let vec = run_kpath(g, &walk.config())?;
    info!(
        "{} on |V|={} |E|={}: {:.3}s",
        vec.config.variant,
        g.node_count(),
        g.edge_count(),
        vec.elapsed.as_secs_f64()
    );
    let omegas = vec.omegas();
    let summary = ComputeSummary {
        config: vec.config.clone(),
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        graph_fingerprint: g.fingerprint().to_owned(),
        parse,
        total_traversals: vec.total_traversals(),
        min_omega: omegas.iter().copied().fold(f64::INFINITY, f64::min),
        max_omega: omegas.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        elapsed_seconds: timing.then_some(vec.elapsed.as_secs_f64()),
    };
    Ok(ComputeOutput {
        csv: write_centrality_csv(&vec, g)?,
        summary,
    })
}

pub fn run_compute(args: &ComputeArgs) -> Result<()> {
    let (g, parse) = load_graph(&args.input)?;
    let out = compute(&g, parse, &args.walk, args.timing)?;
    emit(args.output.as_ref(), &out.csv)?;
    let summary = write_report_json(&out.summary)?;
    match &args.summary {
        Some(p) => fs::write(p, summary)?,
        None => io::stderr().write_all(summary.as_bytes())?,
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessOutput {
    pub variant: String,
    pub kappa: u32,
    pub rho: u64,
    pub bonus: Bonus,
    pub seeds: Vec<u64>,
    pub node_count: usize,
    pub edge_count: usize,
    pub report: RobustnessReport,
}

/// Seeds for `runs` runs: the explicit list if given, else `seed + i`.
pub fn run_seeds(seed: u64, runs: usize, explicit: Option<&[u64]>) -> Vec<u64> {
    match explicit {
        Some(s) => s.to_vec(),
        None => (0..runs as u64).map(|i| seed.wrapping_add(i)).collect(),
    }
}

/// Runs once per seed (concurrently when `jobs` allows) and compares all pairs.
pub fn robustness(
    g: &Graph,
    walk: &WalkArgs,
    seeds: &[u64],
    taus: &[f64],
    jobs: Option<usize>,
) -> Result<RobustnessOutput> {
    if seeds.len() < 2 {
        return Err(KpathError::config("robustness needs at least 2 runs"));
    }
    let base = walk.config();
    let resolved = base.resolve(g)?;
    let pool = thread_pool(jobs)?;
    let vectors: Vec<Vec<f64>> = pool.install(|| {
        seeds
            .par_iter()
            .map(|&s| run_kpath(g, &base.clone().seed(s)).map(|v| v.omegas()))
            .collect::<Result<_>>()
    })?;
    let ids: Vec<String> = seeds
        .iter()
        .enumerate()
        .map(|(i, s)| format!("run{i}-seed{s}"))
        .collect();
    let report = RobustnessReport::from_runs(&ids, &vectors, taus)?;
    Ok(RobustnessOutput {
        variant: walk.variant.clone(),
        kappa: resolved.kappa,
        rho: resolved.rho,
        bonus: resolved.bonus,
        seeds: seeds.to_vec(),
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        report,
    })
}

pub fn run_robustness(args: &RobustnessArgs) -> Result<()> {
    let (g, _) = load_graph(&args.input)?;
    let seeds = run_seeds(args.walk.seed, args.runs, args.seeds.as_deref());
    let out = robustness(&g, &args.walk, &seeds, &args.taus, args.jobs)?;
    emit(args.output.as_ref(), &write_report_json(&out)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleEdge {
    pub src: String,
    pub dst: String,
    pub centrality: f64,
    pub predicted_mean_omega: Option<f64>,
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    pub measured_mean_omega: f64,
    pub measured_sd: f64,
    pub z_score: Option<f64>,
    pub within_bounds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub variant: OracleVariant,
    pub kappa: u32,
    pub rho: u64,
    pub runs: usize,
    pub seed: u64,
    pub node_count: usize,
    pub edge_count: usize,
    pub edges: Vec<OracleEdge>,
    pub per_source_edge_prob: Vec<Vec<f64>>,
    pub leaf_mass: Vec<f64>,
}

/// Mean and sample standard deviation of ω per edge over `runs` seeded runs.
pub fn monte_carlo_omega(
    g: &Graph,
    cfg: &WalkConfig,
    runs: usize,
    jobs: Option<usize>,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if runs == 0 {
        return Err(KpathError::config("runs must be at least 1"));
    }
    let m = g.edge_count();
    let pool = thread_pool(jobs)?;
    // Fixed-size chunks keep the summation order independent of thread count.
    let chunks: Vec<(Vec<f64>, Vec<f64>)> = pool.install(|| {
        (0..runs)
            .collect::<Vec<_>>()
            .par_chunks(1024)
            .map(|chunk| {
                let mut sum = vec![0.0; m];
                let mut sq = vec![0.0; m];
                for &i in chunk {
                    let v = run_kpath(g, &cfg.clone().seed(cfg.seed.wrapping_add(i as u64)))?;
                    for (e, w) in v.omegas().into_iter().enumerate() {
                        sum[e] += w;
                        sq[e] += w * w;
                    }
                }
                Ok((sum, sq))
            })
            .collect::<Result<_>>()
    })?;
    let mut sum = vec![0.0; m];
    let mut sq = vec![0.0; m];
    for (s, q) in chunks {
        for e in 0..m {
            sum[e] += s[e];
            sq[e] += q[e];
        }
    }
    let n = runs as f64;
    let mean: Vec<f64> = sum.iter().map(|s| s / n).collect();
    let sd = sq
        .iter()
        .zip(&mean)
        .map(|(q, mu)| {
            if runs > 1 {
                ((q - n * mu * mu) / (n - 1.0)).max(0.0).sqrt()
            } else {
                0.0
            }
        })
        .collect();
    Ok((mean, sd))
}

pub fn oracle_report(
    g: &Graph,
    variant: OracleVariant,
    kappa: u32,
    rho: Option<u64>,
    runs: usize,
    seed: u64,
    jobs: Option<usize>,
) -> Result<OracleReport> {
    let walk_variant = match variant {
        OracleVariant::Erw => "erw",
        OracleVariant::WerwFrozen => "werw",
    };
    let cfg = WalkConfig {
        variant: walk_variant.into(),
        kappa,
        rho,
        beta: None,
        seed,
    };
    let resolved = cfg.resolve(g)?;
    let exact = oracle::exact_selection_probabilities(g, kappa, variant)?;
    let (mean, sd) = monte_carlo_omega(g, &cfg, runs, jobs)?;
    let beta = resolved.bonus.value(g.edge_count());

    let mut edges = Vec::with_capacity(g.edge_count());
    match variant {
        OracleVariant::Erw => {
            let exact = exact.clone().with_prediction(resolved.rho, resolved.bonus);
            let predicted = exact
                .predicted_mean_omega
                .as_ref()
                .expect("prediction attached");
            for e in g.edges() {
                let i = e.index();
                // Iterations are independent, so each run's count is binomial.
                let p = exact.mean_selection_probability(e).clamp(0.0, 1.0);
                let sigma = beta * (resolved.rho as f64 * p * (1.0 - p) / runs as f64).sqrt();
                let diff = mean[i] - predicted[i];
                let z = if sigma > 0.0 {
                    Some(diff / sigma)
                } else if diff.abs() <= 1e-12 * predicted[i].abs().max(1.0) {
                    Some(0.0)
                } else {
                    None
                };
                edges.push(edge_row(
                    g,
                    e,
                    exact.centrality[i],
                    Some(predicted[i]),
                    None,
                    mean[i],
                    sd[i],
                    z,
                    None,
                ));
            }
        }
        OracleVariant::WerwFrozen => {
            let bounds = oracle::werw_bounds(g, kappa, resolved.rho)?;
            let slack: Vec<f64> = sd.iter().map(|s| 4.0 * s / (runs as f64).sqrt()).collect();
            let ok = oracle::werw_bound_check(g, kappa, resolved.rho, &mean, &slack)?;
            for e in g.edges() {
                let i = e.index();
                edges.push(edge_row(
                    g,
                    e,
                    exact.centrality[i],
                    None,
                    Some(bounds[i]),
                    mean[i],
                    sd[i],
                    None,
                    Some(ok[i]),
                ));
            }
        }
    }
    Ok(OracleReport {
        variant,
        kappa,
        rho: resolved.rho,
        runs,
        seed,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        edges,
        per_source_edge_prob: exact.per_source_edge_prob,
        leaf_mass: exact.leaf_mass,
    })
}

#[allow(clippy::too_many_arguments)]
fn edge_row(
    g: &Graph,
    e: kpath_core::EdgeId,
    centrality: f64,
    predicted: Option<f64>,
    bounds: Option<(f64, f64)>,
    mean: f64,
    sd: f64,
    z: Option<f64>,
    within: Option<bool>,
) -> OracleEdge {
    let (u, v) = g.endpoints(e);
    OracleEdge {
        src: g.label(u).to_owned(),
        dst: g.label(v).to_owned(),
        centrality,
        predicted_mean_omega: predicted,
        lower_bound: bounds.map(|b| b.0),
        upper_bound: bounds.map(|b| b.1),
        measured_mean_omega: mean,
        measured_sd: sd,
        z_score: z,
        within_bounds: within,
    }
}

pub fn run_oracle(args: &OracleArgs) -> Result<()> {
    let (g, _) = load_graph(&args.input)?;
    let variant = match args.variant.as_str() {
        "erw" => OracleVariant::Erw,
        "werw" => OracleVariant::WerwFrozen,
        other => {
            return Err(KpathError::config(format!(
                "unknown oracle variant `{other}`"
            )))
        }
    };
    let report = oracle_report(
        &g, variant, args.kappa, args.rho, args.runs, args.seed, args.jobs,
    )?;
    emit(args.output.as_ref(), &write_report_json(&report)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrongEdge {
    pub src: String,
    pub dst: String,
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankComparison {
    pub file: String,
    pub spearman: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub edge_count: usize,
    pub min_omega: f64,
    pub max_omega: f64,
    pub histogram: Histogram,
    /// `(rank, omega)`, rank 1 = largest.
    pub rank_plot: Vec<(usize, f64)>,
    pub loglog_slope: Option<f64>,
    pub strong_threshold: Option<f64>,
    pub strong_edges: Option<Vec<StrongEdge>>,
    pub comparisons: Vec<RankComparison>,
}

fn edge_key(r: &CentralityRecord) -> (String, String) {
    if r.src <= r.dst {
        (r.src.clone(), r.dst.clone())
    } else {
        (r.dst.clone(), r.src.clone())
    }
}

/// Lines `other` up with `base` by unordered endpoint labels.
pub fn align(base: &[CentralityRecord], other: &[CentralityRecord]) -> Result<Vec<f64>> {
    let lookup: HashMap<_, f64> = other.iter().map(|r| (edge_key(r), r.omega)).collect();
    if lookup.len() != base.len() || other.len() != base.len() {
        return Err(KpathError::MismatchedEdgeSets(format!(
            "{} vs {} edges",
            base.len(),
            other.len()
        )));
    }
    base.iter()
        .map(|r| {
            lookup.get(&edge_key(r)).copied().ok_or_else(|| {
                KpathError::MismatchedEdgeSets(format!("edge {} {} missing", r.src, r.dst))
            })
        })
        .collect()
}

pub fn stats(
    base: &[CentralityRecord],
    others: &[(String, Vec<CentralityRecord>)],
    bins: usize,
    binning: Binning,
    strong_threshold: Option<f64>,
) -> Result<StatsReport> {
    let omegas: Vec<f64> = base.iter().map(|r| r.omega).collect();
    let hist = histogram(&omegas, bins, binning)?;
    let ranks = rank_plot(&omegas);
    let strong_edges = match strong_threshold {
        Some(t) if t < 0.0 => {
            return Err(KpathError::config("strong threshold must be non-negative"))
        }
        Some(t) => Some(
            strong_edge_filter(&omegas, t)
                .into_iter()
                .map(|e| {
                    let r = &base[e.index()];
                    StrongEdge {
                        src: r.src.clone(),
                        dst: r.dst.clone(),
                        omega: r.omega,
                    }
                })
                .collect(),
        ),
        None => None,
    };
    let mut comparisons = Vec::new();
    for (name, records) in others {
        let aligned = align(base, records)?;
        comparisons.push(RankComparison {
            file: name.clone(),
            spearman: spearman(&omegas, &aligned)?,
        });
    }
    Ok(StatsReport {
        edge_count: omegas.len(),
        min_omega: omegas.iter().copied().fold(f64::INFINITY, f64::min),
        max_omega: omegas.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        loglog_slope: loglog_slope(&ranks),
        histogram: hist,
        rank_plot: ranks,
        strong_threshold,
        strong_edges,
        comparisons,
    })
}

fn load_records(path: &Path) -> Result<Vec<CentralityRecord>> {
    read_centrality_csv(fs::File::open(path)?)
}

pub fn run_stats(args: &StatsArgs) -> Result<()> {
    let base = load_records(&args.input)?;
    let others = args
        .compare
        .iter()
        .map(|p| Ok((p.display().to_string(), load_records(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let binning = if args.log_bins {
        Binning::Log
    } else {
        Binning::Linear
    };
    let report = stats(&base, &others, args.bins, binning, args.strong_threshold)?;
    emit(args.output.as_ref(), &write_report_json(&report)?)
}
