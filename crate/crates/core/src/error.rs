use thiserror::Error;

/// Errors produced by graph construction, structural edits and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} has multiplicity 0")]
    ZeroMultiplicity(usize, usize),
    #[error("multiplicity overflow on edge {0}-{1}")]
    MultiplicityOverflow(usize, usize),
    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("cannot suppress vertex {vertex}: {reason}")]
    Suppress { vertex: usize, reason: String },
    #[error("core undefined: {0}")]
    Core(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("not a line graph of a multigraph: contains induced {pattern} ({witness})")]
    NotLineGraph { pattern: String, witness: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("claw-free graph required; induced claw at {0:?}")]
    ClawFound([usize; 4]),
    #[error("{0}")]
    Precondition(String),
    #[error("graph too large for this solver ({0} vertices)")]
    TooLarge(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
