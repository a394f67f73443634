use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("empty point set")]
    EmptyPointSet,

    #[error("invalid rank {rank} for type {series}")]
    InvalidRank { series: char, rank: usize },

    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weight is not dominant")]
    NotDominant,

    #[error("the trivial module has no nullcone stratification")]
    TrivialModule,

    #[error("Weyl orbit exceeds cap of {cap} elements")]
    OrbitCap { cap: usize },

    #[error("module dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: u64, cap: u64 },

    #[error("subset budget of {budget} exceeded (max_subsets)")]
    SubsetBudget { budget: u64 },

    #[error("catalog: {0}")]
    Catalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
