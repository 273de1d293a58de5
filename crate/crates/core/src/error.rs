use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("vanishing order exceeds truncation order {0}; raise --order")]
    TruncationExceeded(usize),

    #[error("closure violated: {0}")]
    ClosureViolation(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }

    /// Errors caused by malformed or unreadable input rather than by the
    /// analysis itself.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Input(_) | Error::Io(_))
    }

    /// Shifts a parse position reported relative to an embedded string
    /// to absolute coordinates.
    pub fn offset(self, line: usize, column: usize) -> Self {
        match self {
            Error::Parse { line: l, column: c, message } => {
                if l <= 1 {
                    Error::Parse { line, column: column + c - 1, message }
                } else {
                    Error::Parse { line: line + l - 1, column: c, message }
                }
            }
            e => e,
        }
    }

    pub fn context(self, what: &str) -> Self {
        match self {
            Error::Parse { line, column, message } => {
                Error::Parse { line, column, message: format!("{what}: {message}") }
            }
            Error::Input(m) => Error::Input(format!("{what}: {m}")),
            e => e,
        }
    }
}
