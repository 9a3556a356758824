//! Error type shared by every module of the library.

use thiserror::Error;

/// Unified error for graph parsing, validation, and numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text that does not conform to the edge-list format.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally invalid input (self-loops, unknown type tags, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A vertex identifier that is not present in the graph.
    #[error("unknown vertex: {0:?}")]
    UnknownVertex(String),

    /// Arguments outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numeric routine failed to reach its tolerance.
    #[error("numeric error: {message} (residual {residual:e})")]
    Numeric { message: String, residual: f64 },

    /// Input exceeds a documented size cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An internal cross-check failed; indicates a bug in this library.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
