use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("coloring parse error at line {line}: {reason}")]
    ColoringFormat { line: usize, reason: String },

    #[error("stream error at line {line}: {source}")]
    Stream { line: usize, source: Box<Error> },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unsupported size: {what} is {actual}, limit is {limit}")]
    Unsupported {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("ill-formed family parameters: {0}")]
    Family(String),

    #[error("infeasible bound parameters: {0}")]
    Infeasible(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
