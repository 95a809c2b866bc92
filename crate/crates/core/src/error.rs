use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    NotPrime,
    NegativeSquareRoot,
    ZeroPolynomial,
    ConstantPolynomial,
    DegreeMismatch { left: usize, right: usize },
    OutOfRange { what: &'static str, value: u64, min: u64, max: u64 },
    /// An input violated a documented precondition.
    Precondition(&'static str),
    ParseRat(String),
    Parse { line: usize, message: String },
    DuplicateTerm { line: usize },
    MissingVariable(String),
    /// An internal cross-check between two independent routes disagreed.
    CrossCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotPrime => write!(f, "modulus is not a prime"),
            Error::NegativeSquareRoot => write!(f, "square root of a negative integer"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::ConstantPolynomial => write!(f, "constant polynomial not allowed here"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::OutOfRange { what, value, min, max } => {
                write!(f, "{what} = {value} outside the supported range {min}..={max}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::ParseRat(s) => write!(f, "malformed rational {s:?}"),
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::DuplicateTerm { line } => write!(f, "line {line}: duplicate exponent vector"),
            Error::MissingVariable(v) => write!(f, "no value assigned to variable {v}"),
            Error::CrossCheck(msg) => write!(f, "cross-check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_range(what: &'static str, value: u64, min: u64, max: u64) -> Result<()> {
    if value < min || value > max {
        Err(Error::OutOfRange { what, value, min, max })
    } else {
        Ok(())
    }
}
