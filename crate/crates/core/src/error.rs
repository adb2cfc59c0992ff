use thiserror::Error;

/// Everything that can go wrong when building or combining the library's values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {value} at position {index}")]
    NegativePart { index: usize, value: i64 },

    #[error("parts not weakly decreasing at position {index}: {prev} < {next}")]
    NotDecreasing { index: usize, prev: u64, next: u64 },

    #[error("row {row} increases at column {col}: {prev} < {next}")]
    RowIncreases { row: usize, col: usize, prev: i64, next: i64 },

    #[error("column {col} increases at row {row}: {above} < {below}")]
    ColumnIncreases { row: usize, col: usize, above: u64, below: u64 },

    #[error("slice sequence must have odd length, got {0}")]
    EvenSliceCount(usize),

    #[error("slices do not interlace at t = {t}")]
    NotInterlacing { t: i64 },

    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<u64>, outer: Vec<u64> },

    #[error("weight sequence has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("series with constant term {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("|x*y| = {0} is outside the open interval (0, 1)")]
    Divergent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
