use thiserror::Error;

use crate::algebra::OperatorFamily;

/// Errors produced by the algebra, composition, diagnostics, and harness layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Membership degrees live in [0, 1]; NaN and out-of-range inputs are
    /// rejected outright rather than clamped.
    #[error("value {0} is not a membership degree in [0, 1]")]
    InvalidUnitValue(f64),

    #[error("expected a {expected}, got a {found}")]
    OperatorMisuse {
        expected: OperatorFamily,
        found: OperatorFamily,
    },

    #[error("cannot aggregate an empty list of membership degrees")]
    EmptyAggregate,

    #[error("a fuzzy vector must contain at least one entry")]
    EmptyVector,

    #[error("a fuzzy relation must have at least one row and one column")]
    EmptyRelation,

    #[error("matrix row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("{what}: got {found} labels for {expected} entries")]
    LabelMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("input vector has {vector} entries but the relation has {rows} rows")]
    DimensionMismatch { vector: usize, rows: usize },

    #[error("vectors have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("column {index} is out of range for a relation with {columns} columns")]
    ColumnOutOfRange { index: usize, columns: usize },

    #[error("axiom checks need a sample budget of at least 1")]
    EmptySampleBudget,

    #[error("the {profile} profile cannot be satisfied with {rows} row(s)")]
    InfeasibleProfile { profile: String, rows: usize },

    #[error("invalid suite configuration: {0}")]
    InvalidSuiteConfig(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
