use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid basis: radix {radix} must be >= 2 and dimension {dim} >= 1")]
    InvalidBasis { radix: u32, dim: usize },

    #[error("digit {digit} out of range for radix {radix}")]
    DigitOutOfRange { digit: u64, radix: u32 },

    #[error("expected {expected} components, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cannot encode negative component {0}")]
    NegativeComponent(String),

    #[error("xi is undefined on the empty word")]
    EpsilonXi,

    #[error("ray with negative homogenizing coordinate {0}")]
    NegativeC(String),

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("NDD format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("transition on line {line} refers to undeclared state {state}")]
    UnknownState { line: usize, state: u64 },

    #[error("chain decomposition exceeds the cap of {cap} chains")]
    ChainBlowup { cap: usize },

    #[error("cannot take the hull of an empty point cloud")]
    EmptyCloud,
}
