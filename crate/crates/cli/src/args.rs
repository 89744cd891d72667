use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// κ-path edge centrality via bounded self-avoiding random walks.
///
/// Every flag with an environment variable resolves as flag > env > default.
#[derive(Debug, Parser)]
#[command(name = "kpath", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute edge centrality for an edge-list file and write it as CSV.
    Compute(ComputeArgs),
    /// Repeat a run with different seeds and compare the results pairwise.
    Robustness(RobustnessArgs),
    /// Exact centrality for a small graph, compared against Monte-Carlo means.
    Oracle(OracleArgs),
    /// Time runs on synthetic graphs across sizes and kappas.
    Bench(BenchArgs),
    /// Histogram and rank-plot data for a centrality CSV.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Args)]
pub struct WalkArgs {
    /// Walk variant: erw (uniform) or werw (weighted).
    #[arg(long, env = "KPATH_VARIANT", default_value = "werw")]
    pub variant: String,

    /// Maximum walk length.
    #[arg(long, env = "KPATH_KAPPA", default_value_t = 20)]
    pub kappa: u32,

    /// Number of walks; defaults to |E| - 1.
    #[arg(long, env = "KPATH_RHO")]
    pub rho: Option<u64>,

    /// Bonus per traversal; defaults to 1/|E|.
    #[arg(long, env = "KPATH_BETA")]
    pub beta: Option<f64>,

    #[arg(long, env = "KPATH_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Edge list: one `u v` pair per line, `#` comments.
    pub input: PathBuf,

    #[command(flatten)]
    pub walk: WalkArgs,

    /// CSV destination; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,

    /// JSON summary destination; stderr when omitted.
    #[arg(long)]
    pub summary: Option<PathBuf>,

    /// Include wall-clock time in the summary (makes it non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct RobustnessArgs {
    pub input: PathBuf,

    #[command(flatten)]
    pub walk: WalkArgs,

    /// Number of runs; run i uses seed + i.
    #[arg(long, env = "KPATH_RUNS", default_value_t = 4)]
    pub runs: usize,

    /// Explicit per-run seeds (comma separated); overrides --runs and --seed.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<u64>>,

    /// Jaccard tolerance; repeatable.
    #[arg(long = "tau", default_values_t = [0.01, 0.05, 0.10])]
    pub taus: Vec<f64>,

    /// Worker threads for independent runs.
    #[arg(long, env = "KPATH_JOBS")]
    pub jobs: Option<usize>,

    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub input: PathBuf,

    /// erw compares against the exact expectation; werw checks the
    /// frozen-weight bounds.
    #[arg(long, env = "KPATH_VARIANT", default_value = "erw")]
    pub variant: String,

    #[arg(long, env = "KPATH_KAPPA", default_value_t = 3)]
    pub kappa: u32,

    #[arg(long, env = "KPATH_RHO")]
    pub rho: Option<u64>,

    /// Independent Monte-Carlo runs; run i uses seed + i.
    #[arg(long, env = "KPATH_RUNS", default_value_t = 10_000)]
    pub runs: usize,

    #[arg(long, env = "KPATH_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, env = "KPATH_JOBS")]
    pub jobs: Option<usize>,

    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Edge counts of the synthetic graphs (|V| = |E|/8).
    #[arg(long, value_delimiter = ',', default_values_t = [25_000, 50_000, 100_000])]
    pub sizes: Vec<usize>,

    #[arg(long, value_delimiter = ',', default_values_t = [5, 10, 20])]
    pub kappas: Vec<u32>,

    #[arg(long, env = "KPATH_VARIANT", default_value = "werw")]
    pub variant: String,

    #[arg(long, env = "KPATH_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Timed repetitions per cell; the median is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,

    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Centrality CSV produced by `compute`.
    pub input: PathBuf,

    #[arg(long, env = "KPATH_BINS", default_value_t = 20)]
    pub bins: usize,

    /// Log-spaced bins.
    #[arg(long)]
    pub log_bins: bool,

    /// Other centrality CSVs over the same graph to rank-correlate against.
    #[arg(long)]
    pub compare: Vec<PathBuf>,

    /// List the edges whose weight exceeds this value.
    #[arg(long)]
    pub strong_threshold: Option<f64>,

    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
