use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant is either an *input* error (the caller handed us something
/// malformed or a support bound that is too small) or an *internal
/// inconsistency* (an exact identity that must hold by theorem failed, which
/// means the implementation is buggy). [`Error::is_internal`] distinguishes
/// the two; the CLI maps them to exit codes 2 and 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("support bound {given} too small: need at least {required} ({context})")]
    SupportBound {
        required: usize,
        given: usize,
        context: String,
    },

    #[error("alphabet mismatch: left operand is in {left}, right operand is in {right}")]
    AlphabetMismatch { left: &'static str, right: &'static str },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("not in the image of the insertion map: {0}")]
    NotInImage(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
