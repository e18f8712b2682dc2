use thiserror::Error;

/// Errors raised by state construction, parsing and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate basis index {0}")]
    DuplicateIndex(usize),
    #[error("qubit count {got} not supported (expected {expected})")]
    QubitCount { got: usize, expected: String },
    #[error("zero state")]
    ZeroState,
    #[error("operation has {got} operators for a {n}-qubit state")]
    SizeMismatch { got: usize, n: usize },
    #[error("singular operator on qubit {0}")]
    SingularOperator(usize),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("slot {slot} must hold the identity")]
    SlotNotIdentity { slot: char },
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("amplitudes are not exact Gaussian rationals up to a common 1/sqrt(k)")]
    NotExact,
    #[error("unknown class {0:?}")]
    UnknownClass(String),
    #[error("no closed form implemented for class {0:?}")]
    NoOracle(String),
    #[error("missing value for t({0})")]
    MissingT(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
