use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be between 1 and {max}, got {got}")]
    InvalidDegree { got: usize, max: usize },

    #[error("{what} = {got} is out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        got: usize,
        lo: usize,
        hi: usize,
    },

    #[error("permutation {0} is odd; an element of the alternating group is required")]
    OddPermutation(String),

    #[error("malformed canonical word: {0}")]
    MalformedWord(String),

    #[error("{perm} is not a shuffle for the descent set {set:?}")]
    NotAShuffle { perm: String, set: Vec<usize> },

    #[error("support of {perm} is not contained in [{bound}]")]
    SupportViolation { perm: String, bound: usize },

    #[error("polynomial coefficient overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("negative exponent {0} in a generating-function term")]
    NegativeExponent(i64),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameters for `{identity}`: {reason}")]
    InvalidParams { identity: String, reason: String },

    #[error("n = {n} exceeds the enumeration cap {cap} for `{what}` (use force to override)")]
    CapExceeded { what: String, n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
