use thiserror::Error;

/// Errors raised by the toolkit. Every variant names the violated condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "tuple {0:?} does not define a free action (odd entries and pair-sum gcds of 2 required)"
    )]
    NotFree([i64; 5]),
    #[error("torsion order e3/8 = {e3}/8 is not an integer")]
    NonIntegralTorsion { e3: i64 },
    #[error("torsion order e3/8 vanishes; the cohomology profile is undefined")]
    DegenerateTorsion,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported prime {p}: {reason}")]
    UnsupportedPrime { p: u64, reason: &'static str },
    #[error("invalid Burnside parameters (m={m}, n={n}, r={r}): {condition}")]
    InvalidBurnside {
        m: u64,
        n: u64,
        r: u64,
        condition: String,
    },
    #[error("group order {0} exceeds the table cap of {cap}", cap = crate::groups::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("malformed group table: {0}")]
    MalformedTable(String),
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u64 },
    #[error("expected a group of order {expected}, got {actual}")]
    WrongOrder { expected: usize, actual: usize },
    #[error(
        "degree {degree} has dimension {dim}; trace sets are only available up to dimension 2"
    )]
    DimensionTooLarge { degree: usize, dim: u64 },
    #[error("codimension {0} is not a nonnegative even integer")]
    OddCodimension(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inconsistent differential choice: {0}")]
    InconsistentChoice(String),
    #[error("profile {0} is not handled by this branch")]
    UnsupportedProfile(String),
    #[error("argument step failed: {0}")]
    StepFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
