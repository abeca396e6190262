use thiserror::Error;

/// Errors raised by the revision engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("operands are drawn from different universes")]
    UniverseMismatch,

    #[error("value {0} lies outside the unit scale [0, 1]")]
    OutOfScale(String),

    #[error("conditioning on {0} is undefined: the event has possibility 0")]
    ConditioningUndefined(String),

    #[error("distribution is subnormalized (maximum {0} < 1)")]
    Subnormalized(String),

    #[error("cannot contract the sure event")]
    ContractSureEvent,

    #[error("input is not a partition: {0}")]
    NotPartition(String),

    #[error("value {0} is not representable as a power of 1/2")]
    NotDyadic(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("universe error: {0}")]
    Universe(String),

    #[error("base is inconsistent to degree {0}")]
    Inconsistent(String),

    #[error("base is not EE-coherent: entry {index} has weight {weight} but is derivable at {derived}")]
    NotEeCoherent {
        index: usize,
        weight: String,
        derived: String,
    },

    #[error("expansion would be inconsistent (degree {0}); use a revision operator")]
    ExpansionRefused(String),

    #[error("input formula is a contradiction")]
    ContradictoryInput,

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
}

/// Coarse classification used by front ends to choose exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Guard,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::GuardExceeded(_) => ErrorKind::Guard,
            _ => ErrorKind::Domain,
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

pub type Result<T, E = Error> = std::result::Result<T, E>;
