use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes of the operands do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A value violates a structural invariant of its type.
    #[error("invalid input: {0}")]
    Input(String),

    /// A construction was called on data that does not satisfy its hypotheses.
    #[error("{op}: precondition `{predicate}` failed{}", detail_suffix(.detail))]
    Precondition {
        op: &'static str,
        predicate: String,
        detail: String,
    },

    /// Malformed document text.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// An identity that must hold by construction did not.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn detail_suffix(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

impl Error {
    pub(crate) fn precondition(op: &'static str, predicate: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            predicate: predicate.into(),
            detail: String::new(),
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by malformed or mis-shaped input rather than a failed hypothesis.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Dimension(_) | Error::Input(_) | Error::Parse { .. })
    }
}
