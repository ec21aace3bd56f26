use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{n}-th root of {value} lies outside the scalar domain")]
    RootOutsideDomain { value: String, n: u32 },

    #[error("rank {n} is out of range for family {family} (need n >= {min})")]
    RankOutOfRange {
        family: String,
        n: usize,
        min: usize,
    },

    #[error("unknown type string `{0}`")]
    UnknownType(String),

    #[error("node {node} is not in 1..={max}")]
    InvalidNode { node: usize, max: usize },

    #[error("alternating sum did not stabilize inside the window (k = {k})")]
    SumNotStabilized { k: i64 },

    #[error("argument carries no generator decomposition")]
    DecompositionUnavailable,

    #[error("({node}, {p}) is not in the index set of the Q-datum")]
    NotInHatIQ { node: usize, p: i64 },

    #[error("function is not in the root lattice: {0}")]
    NotInW0(String),

    #[error("point {0} fits no translate of the reference component")]
    UnclassifiablePoint(String),

    #[error("invalid Q-datum: {0}")]
    InvalidQDatum(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
