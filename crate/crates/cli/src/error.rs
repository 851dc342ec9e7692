use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(#[from] spinhol::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    /// Process exit code: 2 for unreadable or malformed input, 1 when the
    /// input parses but describes an invalid algebra.
    pub fn exit_code(&self) -> i32 {
        use spinhol::Error as E;
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Invalid(E::ParseScalar(_) | E::UnknownCatalog(_) | E::BadParams { .. } | E::Shape(_)) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
