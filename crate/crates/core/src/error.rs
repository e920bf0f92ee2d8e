use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} has {size} vertices, above the supported cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("edge {0:?} is already present")]
    EdgeExists(Vec<usize>),

    #[error("invalid edge {0:?}")]
    InvalidEdge(Vec<usize>),

    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),

    #[error("hypergraph already contains a Berge copy of the pattern graph")]
    NotFree,

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
