use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    Zero,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what} is undefined for n = 1")]
    UndefinedAtOne { what: &'static str },

    #[error("{divisor} does not divide {n}")]
    NotADivisor { divisor: u64, n: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("group order {order} exceeds the table cap of {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("Cayley table is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("Cayley table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("Cayley table is not a Latin square: {0}")]
    NotLatin(String),

    #[error("Cayley table has no identity element")]
    MissingIdentity,

    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("invalid semidirect product (m = {m}, k = {k}, r = {r}): {reason}")]
    InvalidSemidirect {
        m: u64,
        k: u64,
        r: u64,
        reason: &'static str,
    },

    #[error("orders {left} and {right} are not coprime")]
    NotCoprime { left: usize, right: usize },

    #[error("group {descriptor} has order {found}, expected {expected}")]
    OrderMismatch {
        descriptor: String,
        expected: usize,
        found: usize,
    },

    #[error("element {element} is not in a group of order {order}")]
    InvalidElement { element: usize, order: usize },

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Catalog(String),
}
