use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("box lower bound {lower} exceeds upper bound {upper} in coordinate {coord}")]
    InvalidBox { coord: usize, lower: i64, upper: i64 },
    #[error("box is zero-dimensional")]
    EmptyBox,
    #[error("box is too large to materialize")]
    BoxTooLarge,
    #[error("value table has {got} entries but the box holds {expected} points")]
    TableSize { expected: usize, got: usize },
    #[error("function has an empty effective domain")]
    EmptyDomain,
    #[error("matrix is not square")]
    NonSquareMatrix,
    #[error("piece {piece} is not discretely convex at t = {t}")]
    NonConvexPiece { piece: usize, t: i64 },
    #[error("point set is empty")]
    EmptySet,
    #[error("{0:?} is not a permutation of 0..n")]
    InvalidPermutation(Vec<usize>),
    #[error("variable scale factor must be a positive integer, got {0}")]
    BadVarScale(i64),
    #[error("value scale factor must be nonnegative")]
    NegativeValueScale,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset index {index} is out of range for dimension {n}, or not strictly increasing")]
    BadSubset { index: usize, n: usize },
    #[error("subset must be a proper subset of the coordinates")]
    SubsetNotProper,
    #[error("cannot sweep out the only variable")]
    SweepOutOnlyVariable,
    #[error("pivot entry ({k},{k}) = {value} is not positive; coordinate {k} has no bounded minimum")]
    NonPositivePivot { k: usize, value: String },
    #[error("sweep-out requires a pure quadratic without a linear term")]
    SweepOutLinear,
    #[error("index {index} is out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension {n} exceeds the supported limit {limit} for direction enumeration")]
    DimensionLimit { n: usize, limit: usize },
    #[error("start point has infinite value")]
    InfiniteStart,
    #[error("generator box is limited to dimension {max_dim} and side {max_side}, got dimension {dim} and side {side}")]
    GeneratorLimit {
        dim: usize,
        side: i64,
        max_dim: usize,
        max_side: i64,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator self-check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
