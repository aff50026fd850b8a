use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Each variant maps to a stable
/// machine-readable code through [`Error::code`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spectrum must contain at least one frequency")]
    EmptySpectrum,
    #[error("spectrum must be finite and strictly increasing (violated at index {index})")]
    UnorderedSpectrum { index: usize },
    #[error("frequencies must be finite and distinct (violated at index {index})")]
    DuplicateFrequency { index: usize },
    #[error("{what}: expected {expected} entries, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("|Im z| = {im} exceeds the overflow guard {guard}")]
    OverflowGuard { im: f64, guard: f64 },
    #[error("functional {functional} cannot be paired with the {backend} backend")]
    BackendMismatch {
        functional: &'static str,
        backend: &'static str,
    },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("node t_{index} deviates by {deviation} from its integer, must be < 1/4")]
    NodeDeviation { index: i64, deviation: f64 },
    #[error("node rule allows deviations up to {cap}, must be < 1/4")]
    DeviationCap { cap: f64 },
    #[error("nodes are not strictly increasing at index {index}")]
    NodesNotIncreasing { index: i64 },
    #[error("recovery formulas need t_0 != 0")]
    ZeroAnchorNode,
    #[error("missing sample for index {index}")]
    MissingSample { index: i64 },
    #[error("operation undefined for the zero vector")]
    ZeroVector,
    #[error("modulus of continuity vanishes while the approximation error is {error}")]
    DegenerateModulus { error: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable code used by the command-line harness in its error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "E_PARSE",
            Error::EmptySpectrum
            | Error::UnorderedSpectrum { .. }
            | Error::DuplicateFrequency { .. }
            | Error::LengthMismatch { .. } => "E_STATE",
            Error::OverflowGuard { .. } => "E_OVERFLOW_GUARD",
            Error::BackendMismatch { .. } => "E_BACKEND",
            Error::IndexOutOfRange { .. } => "E_RANGE",
            Error::InvalidParameter { .. } => "E_PARAM",
            Error::NodeDeviation { .. }
            | Error::DeviationCap { .. }
            | Error::NodesNotIncreasing { .. } => "E_NODES",
            Error::ZeroAnchorNode => "E_ANCHOR",
            Error::MissingSample { .. } => "E_SAMPLES",
            Error::ZeroVector => "E_ZERO_VECTOR",
            Error::DegenerateModulus { .. } => "E_DEGENERATE",
        }
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
