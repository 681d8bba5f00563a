use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("parameter out of range for {family}: {reason}")]
    ParamOutOfRange { family: String, reason: String },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("largest eigenvalue cluster has size {size}; expected a simple Perron eigenvalue (check tol-eig)")]
    PerronCluster { size: usize },

    #[error("index {index} out of range (0..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("set is not extremal (eccentricity {eccentricity} < dual degree {dual_degree})")]
    NotExtremal {
        eccentricity: usize,
        dual_degree: usize,
    },

    #[error("orthogonal polynomial breakdown at degree {degree} (norm {norm:e}); check tol-m")]
    Breakdown { degree: usize, norm: f64 },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
