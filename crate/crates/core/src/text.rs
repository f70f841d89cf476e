//! Plain-text matrix format.
//!
//! Lines starting with `#` are comments. Every other non-blank line is one row
//! of whitespace-separated decimal integers. Empty input is the 0×0 matrix.
//! Serialization writes single spaces between entries and a newline after
//! every row.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMat;

pub fn parse_matrix(input: &str) -> Result<IntMat> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut width: Option<(usize, usize)> = None;

    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (column, token) in tokens(line) {
            let value = parse_integer(token).ok_or_else(|| Error::Parse {
                line: line_no,
                column,
                message: format!("invalid integer `{token}`"),
            })?;
            row.push(value);
        }
        match width {
            None => width = Some((row.len(), line_no)),
            Some((w, first)) if w != row.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("row has {} entries but line {first} has {w}", row.len()),
                });
            }
            Some(_) => {}
        }
        rows.push(row);
    }

    IntMat::from_rows(&rows)
}

/// Parses a whitespace-separated list of integers, e.g. the `-a "6 10 15"`
/// argument of the command line.
pub fn parse_vector(input: &str) -> Result<Vec<BigInt>> {
    tokens(input)
        .map(|(column, token)| {
            parse_integer(token).ok_or_else(|| Error::Parse {
                line: 1,
                column,
                message: format!("invalid integer `{token}`"),
            })
        })
        .collect()
}

/// Splits a line into tokens, yielding 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push((c + 1, &line[b..byte]));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push((c + 1, &line[b..]));
    }
    out.into_iter()
}

fn parse_integer(token: &str) -> Option<BigInt> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

pub fn format_matrix(m: &IntMat) -> String {
    m.to_string()
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
