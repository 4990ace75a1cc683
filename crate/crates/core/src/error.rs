use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent out of range (1,2]: got {0}")]
    ExponentOutOfRange(f64),

    #[error("alpha must be >= 1: got {0}")]
    AlphaTooSmall(f64),

    #[error("alpha = 1/(a-1) = {alpha} is the unsupported boundary case for a = {a}")]
    AlphaBoundary { a: f64, alpha: f64 },

    #[error("law cutoff n must be positive")]
    ZeroCutoff,

    #[error("infection rate must be positive and finite: got {0}")]
    InvalidLambda(f64),

    #[error("asymptotic comparison requires 0 < lambda < 1: got {0}")]
    LambdaNotAsymptotic(f64),

    #[error("degree sequence total {0} is odd")]
    OddTotal(u64),

    #[error("graph too large: {0} half-edges exceeds the u32 index space")]
    GraphTooLarge(u64),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("malformed graph file, line {line}: {msg}")]
    GraphFormat { line: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("more than {allowed} of {replicas} replicas censored at cap {cap}; raise the cap")]
    TooManyCensored {
        allowed: usize,
        replicas: usize,
        cap: f64,
    },

    #[error("{0}")]
    Experiment(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
