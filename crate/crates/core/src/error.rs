use thiserror::Error;

/// Errors raised by the algebra kernel, the table loaders and the expression language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("trace-length-overflow: word of length {len} exceeds the maximal trace length {max}")]
    TraceLengthOverflow { len: usize, max: usize },

    #[error("index out of bounds: {what}{index} is not available (at most {max})")]
    IndexOutOfBounds {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("type error: {0}")]
    Kind(String),

    #[error("missing bracket-table entry for [{left}, {right}]")]
    MissingTableEntry { left: String, right: String },

    #[error("integrality violation: non-integral coefficient {coefficient} after applying exp")]
    IntegralityViolation { coefficient: String },

    #[error("fresh-index-collision: a{0} already occurs in the compared endomorphisms")]
    FreshIndexCollision(usize),

    #[error("element is not homogeneous with respect to the F4-grading: {0}")]
    NotHomogeneous(String),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("not an F4 root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("table format error at line {line}: {msg}")]
    TableFormat { line: usize, msg: String },

    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("{source} (at line {line}, column {column})")]
    Positioned {
        line: usize,
        column: usize,
        source: Box<Error>,
    },
}

impl Error {
    /// The underlying error with any source positions stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::Positioned { source, .. } => source.root(),
            e => e,
        }
    }

    pub fn at(self, line: usize, column: usize) -> Error {
        match self {
            e @ (Error::Positioned { .. } | Error::Syntax { .. }) => e,
            e => Error::Positioned {
                line,
                column,
                source: Box::new(e),
            },
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
