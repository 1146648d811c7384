use thiserror::Error;

use crate::report::Report;

/// Errors raised by the library.
///
/// The variants map onto the command-line exit taxonomy: usage and domain
/// problems, input contract failures, and the loud `TheoremViolation`, which
/// can only fire when an input slipped past the verifiers or the code is wrong.
#[derive(Debug, Error)]
pub enum Error {
    /// A value outside an operation's domain (bad parameter, uncoloured vertex, non-unit vector).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input exceeds a configured size cap.
    #[error("size limit: {what} has {actual} vertices, cap is {cap}")]
    SizeLimit { what: &'static str, actual: usize, cap: usize },

    /// An input failed a structural contract; the report carries the witnesses.
    #[error("contract violated: {context}\n{report}")]
    Contract { context: String, report: Report },

    /// A verified input produced an outcome the underlying theorem rules out.
    #[error("THEOREM-VIOLATION: {0}")]
    TheoremViolation(String),

    /// Rejection sampling gave up before finding an acceptable sample.
    #[error("sampling failed: no acceptable sample after {attempts} attempts")]
    SamplingExhausted { attempts: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn contract(context: impl Into<String>, report: Report) -> Self {
        Error::Contract {
            context: context.into(),
            report,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
