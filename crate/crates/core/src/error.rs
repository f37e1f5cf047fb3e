use thiserror::Error;

use crate::shapes::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("mu {mu:?} is not contained in lambda {lambda:?}")]
    NotContained { lambda: Vec<u32>, mu: Vec<u32> },
    #[error("cell set is not a skew diagram: {0}")]
    NotSkew(String),
    #[error("cell ({}, {}) is not in the shape", .0.row, .0.col)]
    CellNotInShape(Cell),
    #[error("shape is not edgewise connected")]
    Disconnected,
    #[error("polynomials live in different variable counts ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("corners are undefined for a single-cell strip")]
    SingleCellStrip,
    #[error("direction is undefined at special corner ({}, {})", .0.row, .0.col)]
    SpecialCorner(Cell),
    #[error("decomposition is not nested: {0}")]
    NotNested(String),
    #[error("decomposition is invalid: {0}")]
    InvalidDecomposition(String),
    #[error("index {0} out of range")]
    Index(usize),
    #[error("m-strip parameters rejected: {0}")]
    MStrip(String),
    #[error("malformed lattice path: {0}")]
    MalformedPath(String),
    #[error("tableau rejected: {0}")]
    Tableau(String),
    #[error("entry {entry} exceeds the {nvars} available variables")]
    EntryTooLarge { entry: u32, nvars: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
