use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the matrix toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {lhs_rows}x{lhs_cols} times {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("minor enumeration needs {count} combinations, cap is {cap}")]
    CapExceeded { count: u128, cap: u64 },

    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid elementary operation: {0}")]
    InvalidOp(String),

    #[error("matrix is not full row rank (row {row} has no nonzero entry left)")]
    RankDeficient { row: usize },

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("unsolvable: greatest divisor {divisor} does not divide {target}")]
    Unsolvable { divisor: BigInt, target: BigInt },

    #[error("unsolvable: gcd {gcd} does not divide {target}")]
    UnsolvableLinear { gcd: BigInt, target: BigInt },

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    #[error("linear form has only zero coefficients")]
    DegenerateForm,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
