use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("capacity exceeded: {requested} vertices (limit {limit})")]
    Capacity { requested: usize, limit: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },

    #[error("edge ({u},{v}) not present")]
    MissingEdge { u: usize, v: usize },

    #[error("invalid graph6 data: {0}")]
    Graph6(String),

    #[error("invalid rate: {0}")]
    Rate(String),

    #[error("chromatic target {target} exceeds chromatic number {chi}")]
    ChromaticTarget { target: usize, chi: usize },

    #[error("{what} only asserted for n >= {min_n}, got n = {n}")]
    Domain {
        what: &'static str,
        min_n: usize,
        n: usize,
    },

    #[error("rate is a reciprocal of an integer; the split construction needs 1/r non-integral")]
    ReciprocalRate,

    #[error("below applicability threshold: m = {m} <= 0 at n = {n}")]
    BelowThreshold { m: i64, n: usize },

    #[error("no witness exists: target clique number {target} < proven minimum {lo}")]
    WitnessImpossible { target: usize, lo: usize },

    #[error("witness unavailable for n={n}, alpha<={k}, omega<={target} (search exhausted)")]
    WitnessUnavailable { n: usize, k: usize, target: usize },

    #[error(
        "piece witness unavailable: order={order}, alpha<={alpha_bound}, omega<={target_omega}"
    )]
    PieceUnavailable {
        order: usize,
        alpha_bound: usize,
        target_omega: usize,
    },

    #[error("witness failed certification: {0}")]
    Certification(String),

    #[error("bad table line {line}: {reason}")]
    Table { line: usize, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
