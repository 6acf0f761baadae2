use thiserror::Error;

/// Errors raised by lattice, presentation, and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {0} is out of range 1..=10")]
    IndexOutOfRange(usize),

    #[error("E_{{i,j}} needs two distinct indices, got {0} twice")]
    EqualIndices(usize),

    #[error("the zero class has no such property")]
    ZeroClass,

    #[error("not a polarization candidate: self-intersection {0} is negative")]
    NegativeSquare(i64),

    #[error("class is not big: self-intersection {0} is not positive")]
    NotBig(i64),

    #[error("class is not positive: its pairing with D is {0}")]
    NotPositive(i64),

    #[error("coefficient {name} is negative ({value})")]
    NegativeCoefficient { name: &'static str, value: i64 },

    #[error("epsilon must be 0 or 1, got {0}")]
    InvalidEpsilon(u8),

    #[error("invalid phi-vector {phi:?}: {reason}")]
    InvalidPhiVector { phi: [i64; 10], reason: &'static str },

    #[error("invalid fundamental coefficients: {0}")]
    InvalidCoefficients(&'static str),

    #[error("invalid isotropic 10-sequence: {0}")]
    InvalidSequence(String),

    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),

    #[error("search cap must be at least 1, got {0}")]
    InvalidCap(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
