use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{family} graph requires at least {min} nodes, got {n}")]
    InvalidSize {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("node {node} out of range for a graph on {n} nodes")]
    InvalidNode { node: usize, n: usize },

    #[error("self-loop at node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge weight {0} outside (0, 1]")]
    WeightOutOfRange(f64),

    #[error("n*k must be even for a k-regular graph (n={n}, k={k})")]
    OddDegreeSum { n: usize, k: usize },

    #[error("degree k={k} invalid for n={n} nodes (need 1 <= k < n)")]
    InvalidDegree { k: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("time step {dt} violates the stability bound; need dt <= {required}")]
    UnstableTimeStep { dt: f64, required: f64 },

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
