use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {kind}{rank}: valid types are A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6, E7, E8, F4, G2")]
    InvalidRootSystem { kind: String, rank: usize },

    #[error("weight has {found} coefficients but the root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight is not dominant: coefficient at node {node} is {value}")]
    NotDominant { node: usize, value: i64 },

    #[error("weight is not P-dominant: uncrossed node {node} has coefficient {value}")]
    NotParabolicDominant { node: usize, value: i64 },

    #[error("invalid crossed node set {nodes:?} for rank {rank}")]
    InvalidCrossedNodes { nodes: Vec<usize>, rank: usize },

    #[error("partition {parts:?} has {len} rows, more than the {max} allowed")]
    PartitionTooLong { parts: Vec<u32>, len: usize, max: usize },

    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotAPartition(Vec<i64>),

    #[error("ambient mismatch: Gr({0}, {1}) vs Gr({2}, {3})")]
    AmbientMismatch(usize, usize, usize, usize),

    #[error("invalid Grassmannian Gr({k}, {n}): need 1 <= k < n")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("label {0} is not in canonical form")]
    NotCanonical(String),

    #[error("space does not match the label's ambient Gr({k}, {n}): expected A{}/P{k}", n - 1)]
    SpaceMismatch { k: usize, n: usize },

    #[error("exterior power of {label} is a plethysm with no closed form")]
    UnsupportedPlethysm { label: String },

    #[error("exterior power degree {degree} exceeds rank {rank}")]
    DegreeOutOfRange { degree: usize, rank: usize },

    #[error("section bundle of rank {rank} exceeds dim G/P = {dim}")]
    CodimensionTooLarge { rank: usize, dim: usize },

    #[error("rank hint at {position} is malformed: {reason}")]
    MalformedHint { position: String, reason: String },

    #[error("ranks chosen at {position} are inconsistent with exactness: {reason}")]
    InconsistentRanks { position: String, reason: String },

    #[error("restriction sequence inputs are inconsistent: {0}")]
    InconsistentSequence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("scenario error: {0}")]
    Scenario(String),
}
