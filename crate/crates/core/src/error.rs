use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments (zero where a unit is required, bad shapes, ...).
    InvalidInput(String),
    /// The quadratic form has a nontrivial radical where a nondegenerate
    /// one is required.
    DegenerateForm,
    /// Some diagonal entry vanishes at the requested specialization point.
    BadSpecializationPoint(BigInt),
    /// Every member of the pencil is singular.
    HypothesisViolation(String),
    /// Dimensions are inconsistent with the requested problem.
    DimensionMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Stable machine-readable identifier.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::DegenerateForm => "DegenerateForm",
            Error::BadSpecializationPoint(_) => "BadSpecializationPoint",
            Error::HypothesisViolation(_) => "HypothesisViolation",
            Error::DimensionMismatch(_) => "DimensionMismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::DegenerateForm => f.write_str("quadratic form is degenerate"),
            Error::BadSpecializationPoint(t) => {
                write!(f, "a diagonal entry vanishes at t = {t}")
            }
            Error::HypothesisViolation(m) => write!(f, "hypothesis violated: {m}"),
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
        }
    }
}
