use std::fmt;

use thiserror::Error;

/// Malformed formula text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token (or of end of input).
    pub offset: usize,
    /// Token classes that would have been accepted at `offset`, sorted.
    pub expected: Vec<&'static str>,
    /// The token actually found, `None` at end of input.
    pub found: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() {
                    " or "
                } else {
                    ", "
                })?;
            }
            f.write_str(e)?;
        }
        match &self.found {
            Some(tok) => write!(f, ", found `{tok}`"),
            None => f.write_str(", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("limit exceeded: {what} is {actual}, maximum is {max}")]
    Limit {
        what: &'static str,
        actual: usize,
        max: usize,
    },

    #[error("letter `{0}` is not in the universe")]
    UniverseMismatch(String),

    #[error("invalid universe: {0}")]
    InvalidUniverse(String),
}

pub type Result<T, E = LogicError> = std::result::Result<T, E>;
