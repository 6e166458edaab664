use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid admissible pair (p={p}, q={q}): {reason}")]
    InvalidPair { p: i64, q: i64, reason: PairViolation },

    #[error("({m},{s}) is not an admissible grid point for (p={p}, q={q})")]
    NotAdmissible { p: i64, q: i64, m: i64, s: i64 },

    #[error("level -3/2 is critical; the reducibility criterion does not apply")]
    CriticalLevel,

    #[error("grading parameter must satisfy 0 < xi < 1, got {0}")]
    XiOutOfRange(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("weight out of range: {0}")]
    WeightOutOfRange(String),

    #[error("eigenvalue {value} in {context} is not an admissible weight")]
    ClosureViolation { value: String, context: String },

    #[error("closed form and oracle disagree for {0}")]
    OracleMismatch(String),

    #[error("identity failed: {0}")]
    IdentityFailed(String),

    #[error("t-degree {needed} exceeds the depth bound {bound}")]
    DepthOverflow { needed: i64, bound: u32 },

    #[error("MFF word has fractional exponents; outside the computable range")]
    FractionalInstance,

    #[error("{0}")]
    Invalid(String),
}

/// Which admissibility condition on `(p, q)` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairViolation {
    /// `p >= 2` or `q >= 1` failed.
    Range,
    /// `p ≡ q (mod 2)` failed.
    Parity,
    /// `gcd((p - q)/2, q) = 1` failed.
    Gcd,
}

impl std::fmt::Display for PairViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairViolation::Range => "range condition failed (need p >= 2, q >= 1)",
            PairViolation::Parity => "parity condition failed (need p = q mod 2)",
            PairViolation::Gcd => "gcd condition failed (need gcd((p-q)/2, q) = 1)",
        })
    }
}
