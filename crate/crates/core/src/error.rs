use thiserror::Error;

/// Errors raised by the library. Most of them indicate a usage error on the
/// caller's side (mismatched sizes, malformed text input).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("expected {expected} coefficients for order {order}, got {got}")]
    CoefficientLength { order: u32, expected: usize, got: usize },

    #[error("group parameters mismatch: G({0},{1}) vs G({2},{3})")]
    GroupMismatch(usize, u32, usize, u32),

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorIndex { index: usize, n: usize },

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("invalid token `{0}`")]
    InvalidToken(String),

    #[error("invalid partition `{0}`: parts must be positive and weakly decreasing")]
    InvalidPartition(String),

    #[error("d-partition has {got} components, expected {expected}")]
    ComponentCount { expected: usize, got: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("ordered set partition type {got:?} does not match {expected:?}")]
    TypeMismatch { expected: Vec<usize>, got: Vec<usize> },

    #[error("row {0} used twice in a monomial product")]
    RowCollision(usize),

    #[error("monomial {0} is not of the form x^(e,g)")]
    NotImmanantMonomial(String),

    #[error("element {0} is not in the Young subgroup")]
    NotInYoungSubgroup(String),

    #[error("matrix is not square: {rows} rows, {entries} entries")]
    NotSquare { rows: usize, entries: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
