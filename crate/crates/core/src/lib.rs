//! Finite truncations of Minkowski-sum renormings of sequence spaces.
//!
//! The crate builds, at a configurable truncation, a family of renormed
//! spaces whose unit balls are Minkowski sums of a cross-polytope (or cube)
//! with a diagonal ellipsoid, assembles a composed norm
//! `p(x) = |||x||| + delta * ||Rx||_W` from a table of dual vectors, and
//! probes the resulting geometry: duality formulas, segment margins of the
//! dual ball, strict-convexity margins, and metric-projection scarcity
//! diagnostics. Every iterative solve carries a certified primal-dual gap;
//! the gauge evaluations themselves are exact active-set computations.

pub mod construction;
pub mod experiments;
pub mod linalg;
pub mod norms;
pub mod optim;
pub mod oracle;
pub mod rng;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-finite entry at index {index}")]
    NonFiniteEntry { index: usize },
    #[error("grid indices must satisfy n >= 1 and m >= 1")]
    InvalidGridIndex,
    #[error("invalid phi sequence: {0}")]
    InvalidPhi(String),
    #[error("zero functional has no support point")]
    ZeroFunctional,
    #[error("net epsilon must lie in (0, 1]")]
    InvalidNetEps,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("net does not separate points: {0}")]
    SeparationFailure(String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("subspace must have codimension two, got {0}")]
    CodimNotTwo(usize),
    #[error("level m={m} out of range 1..={m_max}")]
    LevelOutOfRange { m: usize, m_max: usize },
    #[error("block count mismatch: {blocks} blocks vs {specs} specs")]
    BlockCountMismatch { blocks: usize, specs: usize },
    #[error("not an attaining pair: {0}")]
    NotAttaining(String),
    #[error("ambiguous support: {0}")]
    AmbiguousSupport(String),
    #[error("solver did not converge: value {value:.17e}, gap {gap:.3e} after {iterations} iterations")]
    SolverStall {
        value: f64,
        gap: f64,
        iterations: usize,
    },
    #[error("empty record set (set allow_empty to emit a header-only artifact)")]
    EmptyRecords,
    #[error("smooth base mode required: {0}")]
    SmoothModeRequired(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
