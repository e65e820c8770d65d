use thiserror::Error;

use crate::algebra::AxiomReport;
use crate::term::ParseError;

/// Problems with the shape of a Cayley table, independent of the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not a BCK-algebra: {0}")]
    Axioms(AxiomReport),
    #[error("the algebra has no greatest element, so 1, negation and join are undefined")]
    Unbounded,
    #[error("variable `{0}` has no assigned value")]
    UnboundVariable(String),
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("the algebra is not commutative")]
    NotCommutative,
    #[error("{family}_{n} needs n >= {min}")]
    FamilyRange { family: &'static str, n: usize, min: usize },
    #[error("invalid relabeling permutation: {0}")]
    InvalidPermutation(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{order}^{arity} assignment tuples do not fit in a 64-bit counter")]
    TupleSpaceTooLarge { order: usize, arity: usize },
    #[error(
        "no product of chains of total order {order} is isomorphic to this commutative algebra \
         (bounded: {bounded})"
    )]
    NoChainDecomposition { order: usize, bounded: bool },
    #[error("enumeration of order {order} stopped after {nodes} search nodes ({found} tables found)")]
    ResourceLimit { order: usize, nodes: u64, found: usize },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Error {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
