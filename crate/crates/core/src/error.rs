//! Error type shared across the library.

use std::fmt;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library.
///
/// Parsing errors carry a byte offset into the source expression so the
/// CLI can point at the offending character.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter violated a precondition (q < 2, p out of range, ...).
    InvalidParameter(String),
    /// An argument hit a pole or a closed form is undefined there.
    Domain(String),
    /// A sequence family has no anti-difference extension for the
    /// requested conversion.
    UnsupportedFamily(String),
    /// Two routes that must agree disagreed beyond tolerance.
    Inconsistency(String),
    /// Unknown character while lexing, at the given byte offset.
    Lex { position: usize, message: String },
    /// Malformed expression, at the given byte offset.
    Parse { position: usize, message: String },
    /// Call to a function name outside the fixed function table.
    UnknownFunction { position: usize, name: String },
    /// Runtime evaluation failure (division by zero, log of zero, ...).
    Eval(String),
    /// No period up to `q_max` fits the sampled expression.
    NotPeriodic { q_max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::UnsupportedFamily(msg) => write!(f, "unsupported family: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::Lex { position, message } => {
                write!(f, "lex error at offset {position}: {message}")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at offset {position}: {message}")
            }
            Error::UnknownFunction { position, name } => {
                write!(f, "unknown function `{name}` at offset {position}")
            }
            Error::Eval(msg) => write!(f, "evaluation error: {msg}"),
            Error::NotPeriodic { q_max } => {
                write!(f, "expression is not periodic with period <= {q_max}")
            }
        }
    }
}

impl std::error::Error for Error {}
