//! Crate-wide error type.

use std::fmt;

use crate::certify::Ratio;
use crate::graph::VertexSet;

/// Errors reported by graph construction, generators, solvers and
/// certificate pipelines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge endpoint is not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same edge was listed twice (and deduplication was not requested).
    DuplicateEdge { u: usize, v: usize },
    /// A family descriptor had invalid parameters or could not be parsed.
    BadFamily { reason: String },
    /// The edge-list text format could not be parsed. `line` is 1-based.
    ParseEdgeList { line: usize, reason: String },
    /// An exact operation was asked to run beyond its guarded input size.
    TooLarge {
        operation: &'static str,
        limit: usize,
        actual: usize,
    },
    /// A pipeline precondition does not hold for the supplied graph.
    Precondition {
        operation: &'static str,
        reason: String,
    },
    /// A certificate construction finished but its set is smaller than the
    /// bound it was required to reach. Carries the best set found.
    BoundNotAchieved { required: Ratio, best: VertexSet },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            Error::BadFamily { reason } => write!(f, "bad family descriptor: {reason}"),
            Error::ParseEdgeList { line, reason } => {
                write!(f, "edge-list parse error at line {line}: {reason}")
            }
            Error::TooLarge {
                operation,
                limit,
                actual,
            } => write!(
                f,
                "{operation} is guarded to inputs of size at most {limit} (got {actual})"
            ),
            Error::Precondition { operation, reason } => {
                write!(f, "{operation}: precondition violated: {reason}")
            }
            Error::BoundNotAchieved { required, best } => write!(
                f,
                "bound {required} not achieved; best set found has size {} ({best})",
                best.len()
            ),
        }
    }
}

impl std::error::Error for Error {}
