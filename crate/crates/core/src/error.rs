use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    NotIrreducible,
    DegreeMismatch { expected: usize, found: usize },
    DivisionByZero,
    ContextMismatch,
    ConstantModulus,
    ConstantInput,
    RootAtZero,
    NotAdditive { exponent: usize },
    ZeroInput,
    ExceptionalForm,
    FormulaNotValid,
    NonSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, found: usize },
    OracleTooLarge { degree: u64, cap: u64 },
    InvalidElement(String),
    /// Two independent computations disagreed, or an internal identity failed.
    CheckFailed(String),
    /// A configured size or search cap was hit.
    CapExceeded { what: String, value: u64, cap: u64 },
    /// The request is outside the supported range.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotIrreducible => f.write_str("modulus is not irreducible"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "expected a monic polynomial of degree {expected}, found degree {found}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ContextMismatch => f.write_str("operands live in different fields"),
            Error::ConstantModulus => f.write_str("modulus must be nonconstant"),
            Error::ConstantInput => f.write_str("polynomial must be nonconstant"),
            Error::RootAtZero => f.write_str("polynomial vanishes at 0, order undefined"),
            Error::NotAdditive { exponent } => {
                write!(f, "exponent {exponent} is not a power of the characteristic")
            }
            Error::ZeroInput => f.write_str("polynomial must be nonzero"),
            Error::ExceptionalForm => f.write_str("polynomial has the exceptional form aX^(p^h) (+ b)"),
            Error::FormulaNotValid => f.write_str("closed formula does not apply (nilpotent companion)"),
            Error::NonSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::OracleTooLarge { degree, cap } => {
                write!(f, "dense degree {degree} exceeds the oracle cap {cap}")
            }
            Error::InvalidElement(msg) => write!(f, "invalid element: {msg}"),
            Error::CheckFailed(msg) => write!(f, "check failed: {msg}"),
            Error::CapExceeded { what, value, cap } => write!(f, "{what}: {value} exceeds the cap {cap}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
