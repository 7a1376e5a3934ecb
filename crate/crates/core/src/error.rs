use std::fmt;

/// Error category, used by callers (notably the CLI) to map failures to
/// process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input: bad vertex ids, unparsable files,
    /// invalid generator parameters, non-injective vertex functions.
    Input,
    /// Structurally valid input on which the requested quantity is not
    /// defined: disconnected graph for the tree functional, non-geometric
    /// graph for a surface operation, threshold hitting a function value.
    Domain,
    /// A configured resource guard tripped: clique cap, Monte Carlo cap.
    Capacity,
}

#[derive(Debug, Clone)]
pub enum Error {
    Input(String),
    /// Parse failure in a graph file, with the 1-based offending line.
    Parse { line: usize, message: String },
    Domain(String),
    Capacity(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Input(_) | Error::Parse { .. } => ErrorKind::Input,
            Error::Domain(_) => ErrorKind::Domain,
            Error::Capacity(_) => ErrorKind::Capacity,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "input error: {msg}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
