use thiserror::Error;

pub type Result<T, E = KpathError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum KpathError {
    /// No edges remain after dropping self-loops and collapsing duplicates.
    #[error("empty graph")]
    EmptyGraph,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("oracle size limit: {0}")]
    OracleSizeLimit(String),

    #[error("degenerate distribution: {0}")]
    DegenerateDistribution(&'static str),

    #[error("mismatched edge sets: {0}")]
    MismatchedEdgeSets(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl KpathError {
    pub fn config(msg: impl Into<String>) -> Self {
        KpathError::Config(msg.into())
    }
}
