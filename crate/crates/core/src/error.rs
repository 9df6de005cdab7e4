use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} of size {requested} exceeds the configured cap of {cap} (raise it with CCELAB_CAP)")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_vertex(vertex: usize, n: usize) -> Result<()> {
    if vertex < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex, n })
    }
}
