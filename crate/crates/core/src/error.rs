use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where a malformed sequence token was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseLocation {
    /// 1-based line in a sequence file.
    Line(usize),
    /// 1-based position in an inline comma-separated list.
    Token(usize),
}

impl std::fmt::Display for ParseLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseLocation::Line(n) => write!(f, "line {n}"),
            ParseLocation::Token(n) => write!(f, "token {n}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid integer {token:?} at {location}")]
    Parse {
        location: ParseLocation,
        token: String,
    },

    #[error("sequence has no terms")]
    EmptySequence,

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("cofactor expansion is capped at {cap}x{cap}, got {rows}x{rows}")]
    DimensionCapExceeded { rows: usize, cap: usize },

    /// An exact division left a remainder. Always an implementation bug.
    #[error("inexact division in {context}: {dividend} / {divisor}")]
    InexactDivision {
        context: &'static str,
        dividend: String,
        divisor: String,
    },

    #[error("sequence too short: need a_{needed_index}")]
    SequenceTooShort {
        needed_index: usize,
        available: usize,
    },

    #[error("method {method} is only available for the builtin Catalan sequence")]
    MethodUnavailable { method: String },

    #[error("no specialized product formula for shift r = {0} (supported: 4..=7)")]
    UnsupportedShift(usize),
}
