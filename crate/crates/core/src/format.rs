//! Plain-text diagram files.
//!
//! ```text
//! # comment
//! 3
//! 1 3 1 3
//! 2 5 2 5
//! 4 6 4 6
//! ```
//!
//! The first value is `n`, followed by one `a b c d` row per trapezoid.
//! Tokens are whitespace separated and `#` starts a comment that runs to the
//! end of the line.

use std::fmt::Write;

use crate::diagram::TrapezoidDiagram;
use crate::error::FormatError;

/// Parses a diagram file. With `normalize`, rows may hold any distinct
/// integers per line and are rank-normalized; otherwise they must already
/// form a valid diagram.
pub fn parse_diagram(text: &str, normalize: bool) -> Result<TrapezoidDiagram, FormatError> {
    let mut tokens = text.lines().enumerate().flat_map(|(k, line)| {
        let content = line.split('#').next().unwrap_or("");
        content.split_whitespace().map(move |tok| (k + 1, tok))
    });
    let syntax = |line, message: String| FormatError::Syntax { line, message };
    let parse = |(line, tok): (usize, &str)| {
        tok.parse::<i64>()
            .map_err(|_| syntax(line, format!("expected an integer, found '{tok}'")))
    };

    let (header_line, first) = tokens
        .next()
        .ok_or_else(|| syntax(1, "missing trapezoid count".into()))?;
    let n = parse((header_line, first))?;
    if n < 1 {
        return Err(syntax(header_line, format!("trapezoid count must be positive, found {n}")));
    }
    let n = n as usize;
    let mut rows = Vec::with_capacity(n);
    let mut last_line = header_line;
    for k in 0..n {
        let mut row = [0i64; 4];
        for slot in &mut row {
            let (line, tok) = tokens.next().ok_or_else(|| {
                syntax(last_line, format!("expected {n} rows of four integers, row {} is incomplete", k + 1))
            })?;
            *slot = parse((line, tok))?;
            last_line = line;
        }
        rows.push(row);
    }
    if let Some((line, tok)) = tokens.next() {
        return Err(syntax(line, format!("unexpected trailing token '{tok}'")));
    }

    if normalize {
        let real: Vec<[f64; 4]> = rows.iter().map(|r| r.map(|v| v as f64)).collect();
        Ok(TrapezoidDiagram::normalize(&real)?)
    } else {
        Ok(TrapezoidDiagram::validate(&rows)?)
    }
}

pub fn write_diagram(dg: &TrapezoidDiagram) -> String {
    let mut out = String::with_capacity(16 * dg.n() + 8);
    writeln!(out, "{}", dg.n()).unwrap();
    for t in dg.trapezoids() {
        writeln!(out, "{} {} {} {}", t.a, t.b, t.c, t.d).unwrap();
    }
    out
}
