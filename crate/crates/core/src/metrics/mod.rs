//! Run-to-run robustness measures and distribution summaries.

mod distribution;
mod robustness;
mod similarity;

pub use distribution::{
    histogram, loglog_slope, rank_plot, strong_edge_filter, Binning, Histogram,
};
pub use robustness::{
    compare_pair, CorrelationStatus, MeanComparison, PairComparison, RobustnessReport, TauValue,
};
pub use similarity::{
    average_distance, average_ranks, avg_euclidean, euclidean, lambda, modified_jaccard, pearson,
    spearman,
};
