use thiserror::Error;

use crate::tableau::Violation;

/// Errors raised by the tableau, measure and chain operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tableau is not a valid staircase tableau: {}", fmt_violations(.0))]
    InvalidTableau(Vec<Violation>),

    #[error("size {n} exceeds the configured {what} cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("size must be at least {min}, got {n}")]
    SizeTooSmall { n: usize, min: usize },

    #[error("box ({i}, {j}) is outside the staircase of size {n}")]
    BoxOutOfRange { n: usize, i: usize, j: usize },

    #[error("diagonal {d} is outside 2..={max}")]
    DiagonalOutOfRange { d: usize, max: usize },

    #[error("position {j} is outside 1..={max}")]
    PositionOutOfRange { j: usize, max: usize },

    #[error("positions must be strictly increasing")]
    PositionsNotIncreasing,

    #[error("inadmissible measure parameters: {0}")]
    InadmissibleParams(String),

    #[error("formula is singular at these parameters ({0})")]
    Singular(String),

    #[error("inconsistent factorial moments: mass at k={k} is negative")]
    NegativeMass { k: usize },

    #[error("pmf has mass beyond support bound {max}")]
    SupportExceeded { max: usize },

    #[error("masses do not form a probability distribution: {0}")]
    NotADistribution(String),

    #[error("rates are inadmissible: {0}")]
    InadmissibleRates(String),

    #[error("the chain is reducible")]
    ReducibleChain,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
