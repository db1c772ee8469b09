use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("degree sequence {0:?} is not graphical")]
    NotGraphical(Vec<usize>),

    #[error("invalid block layout: {0}")]
    InvalidLayout(String),

    #[error("vertex {vertex} out of range 1..={num_vertices}")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix is not symmetric: |m[{row}][{col}] - m[{col}][{row}]| = {deviation:e}")]
    NotSymmetric {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("eigenvector construction failed: {0}")]
    Construction(String),

    #[error("structured eigenvector at position {index} has residual {residual:e} (tolerance {tolerance:e})")]
    StructuredResidual {
        index: usize,
        residual: f64,
        tolerance: f64,
    },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("setup is not controllable from vertex {0}")]
    Uncontrollable(usize),

    #[error("Kalman oracle refuses {0} vertices (limit 12)")]
    OracleTooLarge(usize),

    #[error("infeasible at horizon {horizon}: condition estimate {condition:e} exceeds {limit:e}")]
    InfeasibleHorizon {
        horizon: f64,
        condition: f64,
        limit: f64,
    },

    #[error("steering missed the target: terminal error {terminal_error:e} > {tolerance:e}")]
    TerminalMiss { terminal_error: f64, tolerance: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
