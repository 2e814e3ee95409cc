use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const MATH: i32 = 4;
    pub const STRICT_FAILURE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed generating function or sequence text.
    #[error("parse error: {0}")]
    Parse(central_core::Error),

    /// Well-formed input that violates a mathematical precondition.
    #[error("{0}")]
    Math(central_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::Math(_) => exit::MATH,
        }
    }
}

impl From<central_core::Error> for CliError {
    fn from(e: central_core::Error) -> Self {
        match e {
            central_core::Error::Syntax { .. } | central_core::Error::UnknownIdentifier { .. } => {
                CliError::Parse(e)
            }
            other => CliError::Math(other),
        }
    }
}
