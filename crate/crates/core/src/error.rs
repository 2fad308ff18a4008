use thiserror::Error;

/// Errors raised by semiring, matrix, graph and interval operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An operand is not an element of the semiring's carrier set.
    #[error("value {value} is not in the carrier of {carrier}")]
    NotInCarrier { carrier: String, value: String },

    /// Matrix or table shapes do not fit the operation.
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    /// A closure does not exist in a non-complete carrier.
    #[error("closure diverges: {0}")]
    Divergence(String),

    /// The carrier does not provide the operation at all.
    #[error("{op} is not supported by {carrier}")]
    Unsupported { op: &'static str, carrier: String },

    /// The operation exists but is undefined at this argument (e.g. inverting zero).
    #[error("{op} is undefined at {value} in {carrier}")]
    Undefined {
        op: &'static str,
        carrier: String,
        value: String,
    },

    /// An interval whose lower bound is not below its upper bound.
    #[error("invalid interval: lower bound {lo} is not below upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Text input could not be parsed. Line and column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dims(op: &'static str, detail: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
