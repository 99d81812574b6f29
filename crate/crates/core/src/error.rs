use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("{what}: size {size} exceeds the configured limit {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
    #[error("{what}: more than {limit} items")]
    Explosion { what: &'static str, limit: usize },
    #[error("maximum independent set family is empty")]
    EmptyFamily,
    #[error("endpoints are not in general position: {0}")]
    GeneralPosition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    /// A construction that mirrors a proof produced an impossible state.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
