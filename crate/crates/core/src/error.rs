use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quotient is not artinian: {0}")]
    NotArtinian(String),
    #[error("the unit ideal has a zero quotient")]
    UnitIdeal,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("(d={d}, t={t}) is not a square pair: h(d)={hd}, h(d+t)={hdt}")]
    NotSquarePair { d: u32, t: u32, hd: u32, hdt: u32 },
    #[error("invalid Hilbert function: {0}")]
    InvalidHilbert(String),
    #[error("invalid width function: {0}")]
    InvalidWidth(String),
    #[error("the forcing condition holds, so no non-lexsegment witness exists")]
    ForcingHolds,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("lattice has {sources} sources but {sinks} sinks")]
    SizeMismatch { sources: usize, sinks: usize },
    #[error("path enumeration exceeded the cap of {cap} partial states")]
    ExplosionGuard { cap: u64 },
    #[error("ideal shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("parse error at byte {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}
