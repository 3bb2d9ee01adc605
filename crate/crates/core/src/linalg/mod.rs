//! Exact matrix arithmetic over the integers and rationals.

mod matrix;
mod normal_form;
mod scalar;

pub use matrix::Matrix;
pub use normal_form::{hnf, rank, snf, solve_in_lattice, solve_with_snf, Hnf, Snf};
pub use scalar::{common_denominator, is_integral, IntegerScalar, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{rows}x{cols} matrix cannot hold {entries} entries")]
    EntryCount {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("column {col} has length {found}, expected {expected}")]
    ColumnLength {
        col: usize,
        expected: usize,
        found: usize,
    },
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
