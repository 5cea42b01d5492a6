use thiserror::Error;

/// Errors raised by the planning library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no free configuration found after {0} rejected samples")]
    NoFreeSpace(u64),
    #[error("nearest-neighbor query on an empty index")]
    EmptyIndex,
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("edge weight {0} is negative or not finite")]
    BadWeight(f64),
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("vertex {0} is not on the reported shortest path")]
    NotOnPath(usize),
    #[error("scenario: {0}")]
    Scenario(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
