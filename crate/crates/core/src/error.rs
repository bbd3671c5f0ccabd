use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} = {value} is outside {lo}..={hi}")]
    OutOfRange { what: &'static str, value: i64, lo: i64, hi: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("composition has a zero part: {0:?}")]
    InvalidComposition(Vec<usize>),

    #[error("descent position {position} is not in 1..{n}")]
    InvalidDescentSet { n: usize, position: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("{what} exceeds the brute-force budget ({limit})")]
    BudgetExceeded { what: String, limit: String },

    #[error("identity `{identity}` failed at {params}: {detail}")]
    IdentityFailed { identity: String, params: String, detail: String },

    #[error("lumping violated at {params}: {detail}")]
    LumpingViolated { params: String, detail: String },

    #[error("empty sample: {0}")]
    EmptySample(String),
}
