use std::path::Path;

/// Errors of the file formats, the session store and the service.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// A document parsed but describes an invalid problem.
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
    #[error("{0}")]
    Solver(tropahp_core::Error),
    #[error("no session with id '{0}'")]
    NotFound(String),
    #[error("version conflict: document is at version {current}, request was based on {requested}")]
    Conflict { current: u64, requested: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Maps a core error, pulling the matrix name out of reciprocity failures.
    pub fn from_core(e: tropahp_core::Error) -> Self {
        match e {
            tropahp_core::Error::NotReciprocal { matrix, violation } => {
                Error::invalid(matrix, violation.to_string())
            }
            tropahp_core::Error::InvalidProblem(msg) => Error::invalid("problem", msg),
            other => Error::Solver(other),
        }
    }

    pub(crate) fn with_source_name(self, path: &Path) -> Self {
        match self {
            Error::Parse {
                line,
                column,
                message,
                ..
            } => Error::Parse {
                source_name: path.display().to_string(),
                line,
                column,
                message,
            },
            other => other,
        }
    }

    /// True for errors caused by the input rather than the environment.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Invalid { .. } | Error::Solver(_)
        )
    }
}

impl From<tropahp_core::Error> for Error {
    fn from(e: tropahp_core::Error) -> Self {
        Error::from_core(e)
    }
}
