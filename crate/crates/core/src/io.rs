//! The Cayley-table text format.
//!
//! Line 1: the order n. Lines 2..n+1: n space-separated entries in 0..n,
//! row = left factor. Optional final line: n space-separated element labels.
//! Lines starting with '#' and blank lines are ignored. Emitted files are
//! UTF-8 with LF line endings.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn significant_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn tokens_of(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut chars = line.char_indices();
    let mut col = 0usize;
    let mut start: Option<(usize, usize)> = None; // (byte offset, column)
    loop {
        let next = chars.next();
        col += 1;
        match next {
            Some((off, c)) if !c.is_whitespace() => {
                if start.is_none() {
                    start = Some((off, col));
                }
            }
            other => {
                if let Some((s, c0)) = start.take() {
                    let end = other.map_or(line.len(), |(off, _)| off);
                    out.push(Token {
                        text: &line[s..end],
                        line: line_no,
                        column: c0,
                    });
                }
                if other.is_none() {
                    break;
                }
            }
        }
    }
    out
}

fn parse_usize(tok: &Token<'_>, what: &str) -> Result<usize> {
    tok.text.parse().map_err(|_| Error::Parse {
        line: tok.line,
        column: tok.column,
        message: format!("expected {what}, found '{}'", tok.text),
    })
}

/// Parse a semigroup from the text format. The result is validated, so a
/// syntactically fine but non-associative table fails with
/// [`Error::NotAssociative`].
pub fn parse_cayley_table(input: &str) -> Result<FiniteSemigroup> {
    let mut lines = significant_lines(input);
    let (first_no, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    let header = tokens_of(first_no, first);
    if header.len() != 1 {
        return Err(Error::Parse {
            line: first_no,
            column: header.get(1).map_or(1, |t| t.column),
            message: "the first line must hold a single order".into(),
        });
    }
    let n = parse_usize(&header[0], "the order")?;
    if n == 0 {
        return Err(Error::Parse {
            line: first_no,
            column: header[0].column,
            message: "the order must be positive".into(),
        });
    }

    let mut table = Vec::with_capacity(n);
    let mut last_line = first_no;
    for _ in 0..n {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: last_line,
            column: 1,
            message: format!("expected {n} table rows"),
        })?;
        last_line = line_no;
        let toks = tokens_of(line_no, line);
        if toks.len() != n {
            let col = toks.get(n).map_or(1, |t| t.column);
            return Err(Error::Parse {
                line: line_no,
                column: col,
                message: format!("expected {n} entries in this row, found {}", toks.len()),
            });
        }
        let mut row = Vec::with_capacity(n);
        for t in &toks {
            let v = parse_usize(t, "a table entry")?;
            if v >= n {
                return Err(Error::Parse {
                    line: t.line,
                    column: t.column,
                    message: format!("entry {v} out of range 0..{n}"),
                });
            }
            row.push(v);
        }
        table.push(row);
    }

    let labels = match lines.next() {
        None => None,
        Some((line_no, line)) => {
            let toks = tokens_of(line_no, line);
            if toks.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("expected {n} labels, found {}", toks.len()),
                });
            }
            if let Some((line_no, _)) = lines.next() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "unexpected content after the labels line".into(),
                });
            }
            Some(toks.iter().map(|t| t.text.to_string()).collect())
        }
    };

    FiniteSemigroup::new(table, labels)
}

/// Emit a semigroup in the text format, byte-stable.
pub fn emit_cayley_table(s: &FiniteSemigroup) -> String {
    let n = s.size();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| s.product(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
