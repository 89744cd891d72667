//! Command implementations behind the `kpath` binary.

pub mod args;
pub mod bench;
pub mod commands;

use kpath_core::KpathError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub fn exit_code(err: &KpathError) -> i32 {
    match err {
        KpathError::Parse { .. } | KpathError::EmptyGraph | KpathError::Csv(_) => EXIT_PARSE,
        KpathError::Config(_)
        | KpathError::OracleSizeLimit(_)
        | KpathError::MismatchedEdgeSets(_)
        | KpathError::DegenerateDistribution(_) => EXIT_CONFIG,
        KpathError::Io(_) | KpathError::Json(_) => EXIT_FAILURE,
    }
}

pub fn run(cli: &args::Cli) -> Result<(), KpathError> {
    use args::Command;
    match &cli.command {
        Command::Compute(a) => commands::run_compute(a),
        Command::Robustness(a) => commands::run_robustness(a),
        Command::Oracle(a) => commands::run_oracle(a),
        Command::Bench(a) => bench::run(a),
        Command::Stats(a) => commands::run_stats(a),
    }
}
