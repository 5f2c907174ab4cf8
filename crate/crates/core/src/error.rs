use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("id index {index} out of range for width {width}")]
    IdOutOfRange { index: usize, width: u32 },

    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A decoder found a certificate that does not have the shape the
    /// construction guarantees for genuine witnesses.
    #[error("inconsistent certificate: {0}")]
    Inconsistent(String),

    #[error("search budget of {budget} {unit} exceeded")]
    BudgetExceeded { budget: u64, unit: &'static str },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Machine-readable parse failure classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseCode {
    Header,
    Arity,
    Range,
    Count,
    Mode,
    LenSum,
    Bits,
    Token,
    Empty,
}

impl ParseCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseCode::Header => "E_HEADER",
            ParseCode::Arity => "E_ARITY",
            ParseCode::Range => "E_RANGE",
            ParseCode::Count => "E_COUNT",
            ParseCode::Mode => "E_MODE",
            ParseCode::LenSum => "E_LENSUM",
            ParseCode::Bits => "E_BITS",
            ParseCode::Token => "E_TOKEN",
            ParseCode::Empty => "E_EMPTY",
        }
    }
}

impl fmt::Display for ParseCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{code} at line {line}: {message}")]
pub struct ParseError {
    pub code: ParseCode,
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(code: ParseCode, line: usize, message: impl Into<String>) -> Self {
        ParseError {
            code,
            line,
            message: message.into(),
        }
    }
}
