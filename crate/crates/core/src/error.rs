use thiserror::Error;

/// Errors raised by graph construction, evaluation and the text formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by a fraction with zero numerator")]
    DivisionByZero,

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),

    #[error("vertex {0} is out of range")]
    UnknownVertex(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) has multiplicity 0")]
    ZeroMultiplicity(usize, usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph too large for enumeration: {0}")]
    SizeLimit(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
