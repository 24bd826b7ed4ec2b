use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A transcendental function was evaluated outside its domain by more
    /// than the round-off tolerance.
    #[error("numerical domain error in {context}: argument {value}")]
    NumericalDomain { context: &'static str, value: f64 },

    /// A point violates the ground-disk invariant of a representation.
    #[error("vertex {vertex} lies outside the ground disk (extent {extent}, limit {limit})")]
    OutsideGroundDisk {
        vertex: usize,
        extent: f64,
        limit: f64,
    },

    /// An operation expected a different metric.
    #[error("metric mismatch: expected {expected}, got {got}")]
    MetricMismatch {
        expected: &'static str,
        got: &'static str,
    },

    /// An operation requires a strongly hyperbolic representation.
    #[error("representation is not strongly hyperbolic (metric must be hyperbolic-polar with ground radius equal to the threshold)")]
    NotStronglyHyperbolic,

    /// The Euclidean-to-hyperbolic conversion could not separate edges from
    /// non-edges within the scale-search budget.
    #[error("conversion failed: {0}")]
    ConversionFailed(String),

    /// A tree references vertices or edges that are not in the host graph.
    #[error("tree/graph mismatch: {0}")]
    TreeGraphMismatch(String),

    /// Routing was requested between vertices of different components.
    #[error("no shared tree between {from_vertex} and {to_vertex}; vertices lie in different components")]
    DifferentComponents { from_vertex: u32, to_vertex: u32 },

    /// A structural invariant that must hold on valid inputs was violated.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A file did not match its documented format.
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
