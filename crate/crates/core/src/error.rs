use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The multiplication table is not square, has an out-of-range entry, or
    /// is otherwise structurally unusable.
    #[error("malformed table: {0}")]
    MalformedTable(String),

    /// Associativity fails. The triple reported is the first violation in
    /// row-major order of (a, b, c).
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    /// An operation that needs two distinct elements was given equal ones.
    #[error("operation requires two distinct elements, got {0} twice")]
    DistinctnessRequired(usize),

    /// An order outside the supported range for an exhaustive algorithm.
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    /// A Rees matrix descriptor whose group table is not a group.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A Rees sandwich matrix with an all-zero row or column while
    /// regularity was required.
    #[error("sandwich matrix has a zero row or column")]
    NonRegularSandwich,

    /// Text-format parse failure. Line and column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
