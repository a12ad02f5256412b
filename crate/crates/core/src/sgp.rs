//! The `.sgp` Cayley-table text format.
//!
//! ```text
//! # left-zero band of order 2
//! 2
//! 0 0
//! 1 1
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` lines of `n`
//! space-separated 0-based entries. Lines whose first non-blank character is
//! `#` are comments; blank lines are ignored. [`to_sgp`] writes the canonical
//! form (no comments, single spaces, trailing newline), which [`parse_sgp`]
//! reads back to the same semigroup.

use thiserror::Error;

use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SgpError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unexpected end of input: expected {expected} more row(s)")]
    MissingRows { expected: usize },
    #[error("invalid semigroup: {0}")]
    Invalid(#[from] SemigroupError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SgpError {
    SgpError::Syntax { line, column, message: message.into() }
}

/// Parses `.sgp` text and validates the resulting table.
pub fn parse_sgp(text: &str) -> Result<FiniteSemigroup, SgpError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (line_no, header) = lines.next().ok_or_else(|| syntax(1, 1, "missing order line"))?;
    let header_tokens = tokens(header);
    let n = match header_tokens.as_slice() {
        [(col, tok)] => tok.parse::<usize>().map_err(|_| syntax(line_no, *col, format!("invalid order `{tok}`")))?,
        [] => return Err(syntax(line_no, 1, "missing order")),
        [_, (col, _), ..] => return Err(syntax(line_no, *col, "order line must hold a single integer")),
    };

    let mut rows = Vec::with_capacity(n);
    for (line_no, line) in lines {
        if rows.len() == n {
            return Err(syntax(line_no, 1, format!("unexpected row beyond the declared order {n}")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let column = toks.get(n).map(|(c, _)| *c).unwrap_or(line.len() + 1);
            return Err(syntax(line_no, column, format!("expected {n} entries, found {}", toks.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let v = tok.parse::<usize>().map_err(|_| syntax(line_no, col, format!("invalid entry `{tok}`")))?;
            row.push(v);
        }
        rows.push(row);
    }
    if rows.len() < n {
        return Err(SgpError::MissingRows { expected: n - rows.len() });
    }
    Ok(FiniteSemigroup::from_rows(&rows)?)
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Canonical `.sgp` text for `s`.
pub fn to_sgp(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
