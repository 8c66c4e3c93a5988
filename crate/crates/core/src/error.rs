use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
///
/// Bounded searches that run out of budget are not errors in the
/// mathematical sense; they surface as [`Error::Inconclusive`] so callers can
/// tell "enlarge the bounds" apart from "the input is wrong".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("endpoint {0} is a root; perturb the interval")]
    EndpointIsRoot(String),

    #[error("root refinement exhausted the {0}-bit precision cap")]
    PrecisionExhausted(u32),

    #[error("polynomial {0} is reducible")]
    Reducible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("eigenvalue is not a simple root of the characteristic polynomial")]
    EigenvalueNotSimple,

    #[error("inconclusive at step `{step}`: {detail}")]
    Inconclusive { step: String, detail: String },

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub fn inconclusive(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Inconclusive {
            step: step.into(),
            detail: detail.into(),
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::EndpointIsRoot(_) => "endpoint-is-root",
            Error::PrecisionExhausted(_) => "precision-exhausted",
            Error::Reducible(_) => "reducible",
            Error::Precondition(_) => "precondition",
            Error::NotBipartite(_) => "not-bipartite",
            Error::Singular(_) => "singular",
            Error::EigenvalueNotSimple => "eigenvalue-not-simple",
            Error::Inconclusive { .. } => "inconclusive",
            Error::Invariant(_) => "invariant",
            Error::Io(_) => "io",
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::Inconclusive { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
