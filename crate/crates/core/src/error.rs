use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    SizeExceeded {
        what: &'static str,
        value: String,
        bound: String,
    },
    #[error("{a} and {r} are not coprime")]
    NotCoprime { a: String, r: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("polynomial has the root zero")]
    ZeroRoot,
    #[error("hypothesis e > mt/2 violated: m={m}, t={t}, e={e}")]
    HypothesisViolated { m: u64, t: u64, e: u64 },
    #[error("no {t}-hyper-irreducible polynomial of degree {m} exists over F_{q}")]
    NonExistence { q: u64, m: u64, t: u64 },
    #[error("counting formula is not integral: {0}")]
    NonIntegralFormula(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("grid spec: {0}")]
    GridParse(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
