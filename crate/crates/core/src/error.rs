use thiserror::Error;

/// Errors produced by graph construction and the analysis routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: String },
    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: f64 },
    #[error(
        "line {line}: edge {{{u},{v}}} repeated with conflicting weight ({first} vs {second})"
    )]
    ConflictingDuplicate {
        line: usize,
        u: String,
        v: String,
        first: f64,
        second: f64,
    },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("matrix is not symmetric at ({row},{col}): {a} vs {b}")]
    Asymmetric {
        row: usize,
        col: usize,
        a: f64,
        b: f64,
    },
    #[error("matrix entry ({row},{col}) is negative: {value}")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("matrix diagonal entry {index} is nonzero: {value}")]
    NonzeroDiagonal { index: usize, value: f64 },
    #[error("invalid edge {{{u},{v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex labels invalid: {0}")]
    InvalidLabels(String),
    #[error("density is undefined for graphs with fewer than 2 vertices (n = {0})")]
    UndefinedDensity(usize),
    #[error("clique order k = {k} out of range for graph with {n} vertices")]
    OrderOutOfRange { k: usize, n: usize },
    #[error("vertex set has {found} members, expected {expected}")]
    SubsetSize { found: usize, expected: usize },
    #[error("threshold must be a non-negative finite number, got {0}")]
    InvalidThreshold(f64),
    #[error("oracle instance too large: C({n},{k}) = {subsets} exceeds {limit}")]
    OracleTooLarge {
        n: usize,
        k: usize,
        subsets: u128,
        limit: u128,
    },
    #[error("participation table does not match: {0}")]
    TableMismatch(String),
    #[error("percentile of an empty weight list")]
    EmptyWeights,
    #[error("percentile must lie in (0, 100], got {0}")]
    InvalidPercentile(f64),
    #[error("graph has no edges")]
    Edgeless,
    #[error("invalid generator parameters: {0}")]
    InvalidGenSpec(String),
    #[error("rankings are not comparable: {0}")]
    InvalidRanking(String),
    #[error("at least {required} samples needed, got {found}")]
    InsufficientSamples { required: usize, found: usize },
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("serialization failed: {0}")]
    Serialization(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
