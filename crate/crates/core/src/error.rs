use std::fmt;

use thiserror::Error;

/// One of the two horizontal lines of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    Upper,
    Lower,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Upper => f.write_str("upper"),
            Line::Lower => f.write_str("lower"),
        }
    }
}

/// A single broken diagram invariant. Trapezoid indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("diagram has no trapezoids")]
    Empty,
    #[error("label {label} of trapezoid {trapezoid} on {line} line is outside 1..={max}")]
    LabelOutOfRange {
        line: Line,
        trapezoid: usize,
        label: i64,
        max: usize,
    },
    #[error("duplicate label {label} on {line} line")]
    DuplicateLabel { line: Line, label: i64 },
    #[error("{}[{trapezoid}] \u{2265} {}[{trapezoid}]", corner_names(*line).0, corner_names(*line).1)]
    Inverted { line: Line, trapezoid: usize },
}

fn corner_names(line: Line) -> (&'static str, &'static str) {
    match line {
        Line::Upper => ("a", "b"),
        Line::Lower => ("c", "d"),
    }
}

/// Every invariant violated by a candidate diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid diagram:")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormalizeError {
    #[error("diagram has no trapezoids")]
    Empty,
    #[error("non-finite coordinate on trapezoid {trapezoid}")]
    NonFinite { trapezoid: usize },
    #[error("left corner is not left of right corner for trapezoid {trapezoid} on {line} line")]
    Inverted { line: Line, trapezoid: usize },
    #[error("trapezoids {first} and {second} share coordinate {value} on {line} line")]
    Tie {
        line: Line,
        first: usize,
        second: usize,
        value: f64,
    },
}

/// Failure to read a diagram file.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationReport),
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
}
