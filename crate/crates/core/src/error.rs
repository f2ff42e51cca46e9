use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NotPositive(i128),

    #[error("{divisor} does not divide {of}")]
    NotDivisor { divisor: u64, of: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("index {i} outside [1, {max}]")]
    OutOfRange { i: u64, max: u64 },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: String, right: String },

    #[error("vector of length {got} in ambient rank {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("ambient rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("field mismatch: F_{{{q1}^{m1}}} vs F_{{{q2}^{m2}}}")]
    FieldMismatch { q1: u64, m1: u64, q2: u64, m2: u64 },

    #[error("q = {0} is not an odd prime power")]
    InvalidFieldOrder(u64),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("theorem `{theorem}` needs parameter `{param}`")]
    MissingParam { theorem: String, param: &'static str },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
}
