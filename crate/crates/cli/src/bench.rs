//! Wall-clock scaling on synthetic uniform random graphs.

use kpath_core::synth::bench_graph;
use kpath_core::walk::{run_kpath, WalkConfig};
use kpath_core::{KpathError, Result};
use log::info;
use serde::{Deserialize, Serialize};

use crate::args::BenchArgs;
use crate::commands::emit;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchCell {
    pub edge_count: usize,
    pub node_count: usize,
    pub kappa: u32,
    /// Median over the repetitions.
    pub seconds: f64,
    pub samples: Vec<f64>,
}

/// Time ratio between two cells that differ in one dimension only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRatio {
    /// The dimension held fixed: an edge count or a kappa.
    pub fixed: u64,
    pub from: u64,
    pub to: u64,
    pub ratio: f64,
    /// `ratio` rescaled to a factor-of-two step: ratio^(1/log2(to/from)).
    pub per_doubling: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub variant: String,
    pub seed: u64,
    pub repeats: usize,
    pub cells: Vec<BenchCell>,
    /// Consecutive sizes at fixed kappa.
    pub edge_scaling: Vec<ScalingRatio>,
    /// Consecutive kappas at fixed size.
    pub kappa_scaling: Vec<ScalingRatio>,
}

fn median(samples: &[f64]) -> f64 {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2.0
    }
}

fn ratio(fixed: u64, from: u64, to: u64, t_from: f64, t_to: f64) -> ScalingRatio {
    let ratio = t_to / t_from;
    let steps = (to as f64 / from as f64).log2();
    ScalingRatio {
        fixed,
        from,
        to,
        ratio,
        per_doubling: ratio.powf(1.0 / steps),
    }
}

/// Times every (size, kappa) cell with default rho and beta. Graph
/// generation is excluded from the timings.
pub fn run_bench(
    sizes: &[usize],
    kappas: &[u32],
    variant: &str,
    seed: u64,
    repeats: usize,
) -> Result<BenchReport> {
    if sizes.is_empty() || kappas.is_empty() {
        return Err(KpathError::config(
            "bench needs at least one size and one kappa",
        ));
    }
    if repeats == 0 {
        return Err(KpathError::config("repeats must be at least 1"));
    }
    let mut sizes = sizes.to_vec();
    let mut kappas = kappas.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    kappas.sort_unstable();
    kappas.dedup();

    let mut cells = Vec::new();
    for &m in &sizes {
        let g = bench_graph(m, seed)?;
        for &kappa in &kappas {
            let cfg = WalkConfig::new(variant).kappa(kappa).seed(seed);
            // Warm-up run, not recorded.
            run_kpath(&g, &cfg)?;
            let samples = (0..repeats)
                .map(|_| run_kpath(&g, &cfg).map(|v| v.elapsed.as_secs_f64()))
                .collect::<Result<Vec<_>>>()?;
            let seconds = median(&samples);
            info!("|E|={m} kappa={kappa}: {seconds:.4}s");
            cells.push(BenchCell {
                edge_count: m,
                node_count: g.node_count(),
                kappa,
                seconds,
                samples,
            });
        }
    }

    let time = |m: usize, k: u32| {
        cells
            .iter()
            .find(|c| c.edge_count == m && c.kappa == k)
            .map(|c| c.seconds)
            .unwrap()
    };
    let mut edge_scaling = Vec::new();
    for &k in &kappas {
        for w in sizes.windows(2) {
            edge_scaling.push(ratio(
                k as u64,
                w[0] as u64,
                w[1] as u64,
                time(w[0], k),
                time(w[1], k),
            ));
        }
    }
    let mut kappa_scaling = Vec::new();
    for &m in &sizes {
        for w in kappas.windows(2) {
            kappa_scaling.push(ratio(
                m as u64,
                w[0] as u64,
                w[1] as u64,
                time(m, w[0]),
                time(m, w[1]),
            ));
        }
    }
    Ok(BenchReport {
        variant: variant.to_owned(),
        seed,
        repeats,
        cells,
        edge_scaling,
        kappa_scaling,
    })
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let report = run_bench(
        &args.sizes,
        &args.kappas,
        &args.variant,
        args.seed,
        args.repeats,
    )?;
    emit(
        args.output.as_ref(),
        &kpath_core::io::write_report_json(&report)?,
    )
}
