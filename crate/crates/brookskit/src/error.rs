use crate::graph_core::coloring::Color;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    Validation(String),

    /// An operation was called outside its domain. `witness` carries the
    /// offending vertices when there is a natural certificate (a clique, a
    /// cycle, an unreachable set).
    #[error("precondition failed: {reason}")]
    Precondition {
        reason: String,
        witness: Option<Vec<usize>>,
    },

    #[error("scale refusal: {what} is {value}, limit {limit}")]
    Scale {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("no free color for vertex {vertex}; its neighbors use {blocked:?}")]
    Stuck { vertex: usize, blocked: Vec<Color> },

    /// A proven bound failed on a concrete input. Either the input violates
    /// a precondition that slipped through or the implementation is wrong.
    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn precondition(reason: impl Into<String>) -> Self {
        Error::Precondition {
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn precondition_with(reason: impl Into<String>, witness: Vec<usize>) -> Self {
        Error::Precondition {
            reason: reason.into(),
            witness: Some(witness),
        }
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precondition { .. })
    }

    pub fn is_scale_refusal(&self) -> bool {
        matches!(self, Error::Scale { .. })
    }

    /// Short machine tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Precondition { .. } => "precondition",
            Error::Scale { .. } => "scale_refusal",
            Error::Stuck { .. } => "stuck",
            Error::BoundViolation(_) => "bound_violation",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks an internal invariant, returning `Error::Invariant` on failure.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
