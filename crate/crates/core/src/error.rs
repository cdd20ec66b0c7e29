use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),

    #[error("malformed modulus: {0}")]
    MalformedModulus(String),

    #[error("modulus {0:?} is reducible over GF({1})")]
    ReducibleModulus(Vec<u32>, u32),

    #[error("no built-in modulus for GF({p}^{e}); supply one explicitly")]
    MissingModulus { p: u32, e: u32 },

    #[error("field order {0} is larger than the supported maximum")]
    FieldTooLarge(u64),

    #[error("{value} is not an element of GF({q})")]
    InvalidScalar { value: u32, q: u32 },

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("size guard exceeded: {what} is {size}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("operation budget exceeded: estimated {estimate} elementary operations, budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },

    #[error("{0} must be nonzero")]
    ZeroVector(&'static str),

    #[error("defining set has rank {rank}, expected full rank {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("code has no nonzero codeword")]
    EmptyCode,

    #[error("function is linear: f(x) = w.x with w = {0:?}")]
    LinearFunction(Vec<u32>),

    #[error("inconsistent linear system: rank(A) = {rank_a}, rank(A|b) = {rank_ab}")]
    InconsistentSystem { rank_a: usize, rank_ab: usize },

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("theorem {theorem} does not apply to a {variant} function")]
    IncompatibleVariant {
        theorem: &'static str,
        variant: &'static str,
    },

    #[error("hypotheses of theorem {theorem} fail: {condition}")]
    HypothesisFailed {
        theorem: &'static str,
        condition: String,
    },

    #[error("witness construction bug: {0}")]
    ConstructionBug(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
