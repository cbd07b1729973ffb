use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("directed cycle through vertex `{0}`")]
    Cycle(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} has {size} vertices, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no network with the requested dependence after {0} attempts")]
    SearchExhausted(usize),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("degenerate interpolation path: {0}")]
    DegeneratePath(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Cycle(_)
            | Error::DuplicateVertex(_)
            | Error::SelfLoop(_)
            | Error::InvalidModel(_)
            | Error::Singular(_) => 2,
            Error::SizeLimit { .. } => 3,
            _ => 1,
        }
    }
}
