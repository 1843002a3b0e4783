use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("scene dimension must be at least 1")]
    ZeroDimension,

    #[error("scene has no primitives")]
    EmptyScene,

    #[error("invalid primitive #{index}: {reason}")]
    InvalidPrimitive { index: usize, reason: String },

    #[error("puncture {0} lies on no primitive")]
    PunctureOffScene(String),

    #[error("invalid component partition: {0}")]
    InvalidPartition(String),

    #[error("empty point set")]
    EmptyInput,

    #[error("adjacency level {k} out of range for dimension {dim}")]
    AdjacencyOutOfRange { k: usize, dim: usize },

    #[error("scene closure is disconnected")]
    ClosureDisconnected,

    #[error(
        "voxel ordering stuck after {placed} voxels: {remaining} voxels unreachable, \
         first unreachable anchor {first:?}"
    )]
    OrderStuck {
        placed: usize,
        remaining: usize,
        first: Vec<i64>,
    },

    #[error("offset discretization at the sweep bound r2={bound} is not {j}-connected")]
    SweepBoundTooSmall { j: usize, bound: String },

    #[error("connectivity bound violated: {0}")]
    BoundViolation(String),

    #[error("scene file: {0}")]
    SceneFile(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
