use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric: a[{i}][{j}] = {a_ij} but a[{j}][{i}] = {a_ji}")]
    NotSymmetric {
        i: usize,
        j: usize,
        a_ij: f64,
        a_ji: f64,
    },

    #[error("matrix entry ({i}, {j}) is not finite")]
    NonFinite { i: usize, j: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix dimension {n} exceeds the eigensolver limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("diagonal entries are not all equal (a[0][0] = {first}, a[{index}][{index}] = {value})")]
    UnequalDiagonal { first: f64, index: usize, value: f64 },

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
