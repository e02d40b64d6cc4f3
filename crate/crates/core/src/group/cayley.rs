//! Plain-text Cayley table files.
//!
//! ```text
//! # Klein four-group
//! 4
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! ```
//!
//! The first content line is the order `n`; the next `n` content lines are
//! rows of `n` whitespace-separated 0-based indices. Lines whose first
//! non-blank character is `#` are comments; blank lines are skipped. The
//! identity may be any index.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Parsed rows plus the 1-based source line of each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    pub rows: Vec<Vec<usize>>,
    pub row_lines: Vec<usize>,
}

pub fn parse_cayley_table(text: &str) -> Result<CayleyTable> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = content.next().ok_or(Error::Parse {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            message: "group order must be positive".into(),
        });
    }

    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line, text) in content {
        if rows.len() == n {
            return Err(Error::Parse {
                line,
                message: format!("unexpected content after {n} rows"),
            });
        }
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a nonnegative integer: {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::Parse {
                line,
                message: format!("entry {bad} is out of range 0..{n}"),
            });
        }
        rows.push(row);
        row_lines.push(line);
        last_line = line;
    }
    if rows.len() != n {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(CayleyTable { rows, row_lines })
}

impl FiniteGroup {
    /// Parse and validate a Cayley table file body. Row-level validation
    /// failures are reported against the source line of the offending row.
    pub fn from_cayley_str(text: &str) -> Result<Self> {
        let table = parse_cayley_table(text)?;
        FiniteGroup::from_cayley_table(&table.rows).map_err(|err| {
            let line_of = |row: usize| table.row_lines[row];
            match err {
                Error::NotAssociative { a, b, c } => Error::Parse {
                    line: line_of(a),
                    message: format!("({a}*{b})*{c} != {a}*({b}*{c}): not associative"),
                },
                Error::NotLatin(msg) => Error::Parse {
                    line: table.row_lines[0],
                    message: format!("not a Latin square: {msg}"),
                },
                Error::MissingIdentity => Error::Parse {
                    line: table.row_lines[0],
                    message: "no identity element".into(),
                },
                other => other,
            }
        })
    }
}
