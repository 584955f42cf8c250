use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("pole at u = {0}")]
    Pole(String),

    #[error("pole at unity")]
    PoleAtUnity,

    #[error("grading mismatch: {0}")]
    GradingMismatch(String),

    #[error("coefficient ({k}, {d:?}) is beyond truncation")]
    BeyondTruncation { k: usize, d: Vec<usize> },

    #[error("binomial base must be 1 + nilpotent part")]
    NonNilpotentBase,

    #[error("target data incomplete: missing class for beta = {0:?}")]
    TargetDataIncomplete(Vec<usize>),

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration too large: {0} tuples exceeds the guard")]
    TooLarge(u128),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("class at (k = {k}, beta = {beta:?}) is not a polynomial in u: {value}")]
    NonPolynomialClass {
        k: usize,
        beta: Vec<usize>,
        value: String,
    },

    #[error("fixed-point iteration did not become stationary after {0} passes")]
    NoConvergence(usize),

    #[error("branch: {0}")]
    Branch(String),

    #[error("floating-point overflow in {0}")]
    Overflow(String),

    #[error("Euler limit diverges at beta = {0:?}: class / [W] does not vanish at u = 1")]
    EulerLimitDiverges(Vec<usize>),

    #[error("io error: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
