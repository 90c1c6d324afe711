use thiserror::Error;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input, violated precondition, or an infeasible request.
    Input,
    /// A configured resource budget was hit before an answer was reached.
    Limit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree vector has {k} entries; at least 2 are required")]
    TooFewFactors { k: usize },

    #[error("degree d_{index} = {degree} is smaller than 2")]
    DegreeTooSmall { index: usize, degree: u32 },

    #[error("degrees are not ordered: d_{index} = {left} > d_{next} = {right}", next = .index + 1)]
    NotOrdered { index: usize, left: u32, right: u32 },

    #[error("largest degree {delta} is at most 4; the hypertangent selection needs at least 5")]
    DeltaTooSmall { delta: u32 },

    #[error("hypertangent selection sums to {sum}, expected M - k - 3 = {expected}")]
    SelectionInconsistent { sum: i64, expected: i64 },

    #[error("no integer vector with {k} entries >= 2 sums to {total}")]
    Infeasible { k: u32, total: u32 },

    #[error("limit exceeded: {what} (limit {limit})")]
    LimitExceeded { what: String, limit: u64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("ledger trace is not at the tangent stage: {0}")]
    TraceIncomplete(String),

    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("variable counts differ: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("{modulus} is not a prime below 2^31")]
    NotPrime { modulus: u64 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("h lies in the span of the linear parts q_(i,1)")]
    HInTangentSpan,

    #[error("expected a nonzero homogeneous linear form")]
    NotLinearForm,

    #[error("linear parts are dependent (rank {rank} < k = {k}); the point is singular")]
    LinearPartsDependent { rank: usize, k: usize },

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("resampling gave up after {attempts} attempts")]
    RetriesExhausted { attempts: u32 },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::LimitExceeded { .. } => ErrorKind::Limit,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn limit(what: impl Into<String>, limit: impl TryInto<u64>) -> Self {
        Error::LimitExceeded {
            what: what.into(),
            limit: limit.try_into().unwrap_or(u64::MAX),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
