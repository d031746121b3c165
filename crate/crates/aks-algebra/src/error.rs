use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the crate. Structural misuse (mixing moduli,
/// indexing past a tuple) panics instead; these variants cover conditions
/// that depend on runtime values a caller cannot always rule out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    BothZero,

    #[error("{y} is not coprime to {r}, so it has no multiplicative order")]
    NotCoprime { y: BigUint, r: u64 },

    #[error("no admissible r up to {bound} for n = {n}; the search bound 2*bitlen(n)^6 should never be exceeded")]
    OrderWitnessBound { n: BigUint, bound: u64 },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("leading coefficient {lc} is not invertible mod {modulus}")]
    NonInvertibleLeading { lc: u64, modulus: u64 },

    #[error("constant term must be 1 to invert a power series, got {0}")]
    NonUnitConstantTerm(u64),

    #[error("polynomial degree {deg} exceeds the reversal frame {frame}")]
    DegreeExceedsFrame { deg: usize, frame: usize },

    #[error("rank {rank} is outside 1..={max}")]
    RankOutOfRange { rank: BigUint, max: BigUint },

    #[error("expected popcount {expected}, got {got}")]
    PopcountMismatch { expected: u64, got: u64 },

    #[error("expected bit length at most {limit}, got {got}")]
    BitLengthExceeded { limit: u64, got: u64 },

    #[error("grid index {l} is outside 1..=(k+1)^2 = {max}")]
    GridIndexOutOfRange { l: u64, max: u64 },

    #[error("requires {what}")]
    Precondition { what: String },

    #[error("field with {size} elements is too large to enumerate")]
    FieldTooLarge { size: BigUint },

    #[error("{0} is not a root of the given polynomial")]
    NotARoot(String),

    #[error("checked property failed: {0}")]
    PropertyViolation(String),
}

impl Error {
    pub fn precondition(what: impl Into<String>) -> Self {
        Error::Precondition { what: what.into() }
    }
}
