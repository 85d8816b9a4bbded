use thiserror::Error;

use crate::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("matroid has loops {0:?}")]
    Loops(Vec<Label>),

    #[error("element {0} is a coloop; use the coloop extension instead")]
    Coloop(Label),

    #[error("polynomial is not palindromic of degree {0}")]
    NotPalindromic(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported group action: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Invalid(_) | Error::Io(_) | Error::GroupMismatch(_) => 1,
            Error::Loops(_)
            | Error::Coloop(_)
            | Error::NotPalindromic(_)
            | Error::Precondition(_)
            | Error::Unsupported(_) => 2,
            Error::Internal(_) => 3,
        }
    }
}
