use thiserror::Error;

/// Errors raised by the construction routines of this crate.
///
/// Verification routines never return errors; a failed identity is an entry
/// in the corresponding report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("block coordinates must have odd length, got {0}")]
    EvenBlockLength(usize),
    #[error("block coordinates must be {expected}, got {got:?}")]
    BlockOrder { expected: &'static str, got: Vec<i64> },
    #[error("shift must be positive, got {0}")]
    NonPositiveShift(i64),
    #[error("invalid signature {parts:?}: {reason}")]
    InvalidSignature { parts: Vec<usize>, reason: String },
    #[error("shift k = {k} is not admissible for period p = {p}")]
    InadmissibleShift { p: usize, k: usize },
    #[error("invalid permutation {perm:?}: {reason}")]
    InvalidPermutation { perm: Vec<usize>, reason: String },
    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),
    #[error("period must be odd, got {0}")]
    EvenPeriod(usize),
    #[error("the shift of the chain vanishes")]
    ZeroShift,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("{0} is a perfect square, so it does not generate a quadratic extension")]
    SquareGenerator(String),
    #[error("duplicate Hermite index {0} in family index list")]
    DuplicateIndex(usize),
    #[error("the zero polynomial has no roots to find")]
    ZeroPolynomial,
    #[error("root iteration did not converge at {precision} bits for roots {unconverged:?}")]
    NonConvergence { precision: u32, unconverged: Vec<usize> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
