use thiserror::Error;

/// Errors reported by graph construction, parsing and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("{what} is limited to {limit} vertices, graph has {n}")]
    BudgetExceeded { what: &'static str, n: usize, limit: usize },
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search failed: {0}")]
    SearchFailure(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }
}
