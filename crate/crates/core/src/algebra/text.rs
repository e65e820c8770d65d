//! Plain-text Cayley tables.
//!
//! ```text
//! # PI
//! 3
//! 0 0 0
//! 1 0 0
//! 2 2 0
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n`
//! space-separated entries; row `x`, column `y` holds `x·y`. Lines starting
//! with `#` and blank lines are ignored on input and never written.

use super::{BckAlgebra, Element};
use crate::error::{Result, TableError};

/// Parses the text format into an order and its rows without checking axioms.
pub fn parse_table(text: &str) -> Result<(usize, Vec<Vec<Element>>), TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(TableError::Empty)?;
    let order: usize = header.parse().map_err(|_| TableError::Syntax {
        line: header_line,
        message: format!("expected the order as a single integer, found `{header}`"),
    })?;
    if order == 0 {
        return Err(TableError::Empty);
    }

    let mut rows = Vec::with_capacity(order);
    for (line, content) in lines {
        if rows.len() == order {
            return Err(TableError::Syntax {
                line,
                message: format!("unexpected content after {order} rows"),
            });
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Element>().map_err(|_| TableError::Syntax {
                    line,
                    message: format!("`{tok}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(TableError::NotSquare {
                row: rows.len(),
                len: row.len(),
                expected: order,
            });
        }
        if let Some((col, &value)) = row.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(TableError::OutOfRange {
                row: rows.len(),
                col,
                value,
                order,
            });
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(TableError::NotSquare {
            row: rows.len(),
            len: 0,
            expected: order,
        });
    }
    Ok((order, rows))
}

/// Parses and validates an algebra.
pub fn read_algebra(text: &str) -> Result<BckAlgebra> {
    let (order, rows) = parse_table(text)?;
    BckAlgebra::from_table(order, &rows)
}

pub fn format_rows(order: usize, table: &[Element]) -> String {
    let mut out = format!("{order}\n");
    for row in table.chunks(order) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_table(a: &BckAlgebra) -> String {
    format_rows(a.order(), a.table())
}
