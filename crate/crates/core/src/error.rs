use core::fmt;

use crate::mpoly::Var;

/// Failure modes shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A negative-index rising factorial hit a zero factor, so its value is infinite.
    Pole,
    /// Reciprocal of a vanishing quantity.
    DivisionByZero,
    /// The denominator of a rational shares a factor with the modulus prime.
    NonInvertibleDenominator,
    /// Modulus base is not an odd prime below the supported bound, or exponent is zero.
    InvalidModulus { p: u64, e: u32 },
    /// A polynomial was evaluated without a value for one of its variables.
    MissingAssignment(Var),
    /// Parameters violate the hypotheses of the operation.
    InvalidParameters(&'static str),
    /// No congruence is stated for the requested combination.
    UnsupportedSpec(&'static str),
    /// A sampled point was outside the domain where the check is meaningful.
    SkippedPoint(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole => f.write_str("rising factorial with negative index has a pole"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NonInvertibleDenominator => {
                f.write_str("denominator is not invertible modulo the prime power")
            }
            Error::InvalidModulus { p, e } => {
                write!(f, "invalid prime power modulus {p}^{e}")
            }
            Error::MissingAssignment(v) => write!(f, "no value assigned to variable {v}"),
            Error::InvalidParameters(why) => write!(f, "invalid parameters: {why}"),
            Error::UnsupportedSpec(why) => write!(f, "unsupported congruence: {why}"),
            Error::SkippedPoint(why) => write!(f, "point skipped: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
