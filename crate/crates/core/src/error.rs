use thiserror::Error;

/// Errors produced by the likelihood engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exponential-cost routine was asked to run above its configured order.
    #[error("{what}: order {order} exceeds the configured limit of {limit} (raise `{flag}` to override)")]
    LimitExceeded {
        what: &'static str,
        flag: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("malformed input at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },

    #[error("not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("no closed form is available for the {0} family")]
    NoClosedForm(&'static str),

    #[error("cannot draw {k} items from a population of {n}")]
    InvalidSubsetSize { n: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
