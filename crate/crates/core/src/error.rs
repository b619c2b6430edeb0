use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("non-integer {0} where an integer is required")]
    NonInteger(&'static str),
    #[error("constant term must be exactly 1")]
    ConstantTermNotOne,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has no dependence on the Euler variable")]
    ConstantInY,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("requested order {requested} exceeds stored order {stored}")]
    OrderExceeded { requested: i64, stored: i64 },
    #[error("elimination produced non-integral exponent {0}")]
    NonIntegralExponent(String),
    #[error("local factor degenerates at p = {0}")]
    Degenerate(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("pole of zeta at s = 1")]
    Pole,
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("zeros table, line {line}: {msg}")]
    ZerosTable { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
