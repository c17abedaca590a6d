//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("{op}: dimension mismatch ({lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols})")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("{op}: matrix must be square, got {rows}x{cols}")]
    NonSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{op}: index {index} out of range for size {size}")]
    IndexOutOfRange {
        op: &'static str,
        index: usize,
        size: usize,
    },

    #[error("{op}: matrix is not Hermitian")]
    NotHermitian { op: &'static str },

    #[error("division by zero quaternion")]
    ZeroDivision,

    #[error("matrix is singular (double determinant is zero)")]
    Singular,

    #[error("determinant size cap exceeded: n = {n} > cap = {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("route {route:?} is not applicable: {reason}")]
    RouteInapplicable { route: String, reason: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    // Internal invariant violations: a Hermitian determinant with a nonzero
    // imaginary residue, or a zero minor-sum denominator at positive rank.
    // Either means the determinant engine itself is broken.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
