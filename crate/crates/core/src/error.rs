//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the algebra engine.
///
/// Degenerate inputs are reported, never silently repaired: the library
/// leaves redraw/retry policy to the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus is not an odd prime.
    NotPrime(u64),
    /// Multiplicative inverse of zero requested.
    DivisionByZero,
    /// Operands live over different fields or variable counts.
    DimensionMismatch { expected: usize, found: usize },
    /// Total degree of the zero polynomial requested.
    ZeroPolynomial,
    /// A zero generator where a nonzero one is required.
    ZeroGenerator { index: usize },
    /// Minor extraction from a matrix with more rows than columns.
    MinorShape { rows: usize, cols: usize },
    /// Invalid shape parameters for system generation.
    InvalidShape(String),
    /// Gröbner computation exceeded the configured degree cap.
    DegreeCapExceeded { degree: u32, cap: u32 },
    /// Operation requires a zero-dimensional ideal.
    NotZeroDimensional,
    /// Power-series division left a remainder.
    InexactDivision { degree: usize },
    /// Coefficient past the truncation bound of a series requested.
    TruncationExceeded { requested: usize, truncation: usize },
    /// Malformed text in the polynomial file format.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(q) => write!(f, "{q} is not an odd prime"),
            Error::DivisionByZero => write!(f, "division by zero in the field"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => write!(f, "total degree of the zero polynomial is undefined"),
            Error::ZeroGenerator { index } => write!(f, "generator {index} is zero"),
            Error::MinorShape { rows, cols } => {
                write!(f, "maximal minors require rows <= cols, got {rows}x{cols}")
            }
            Error::InvalidShape(msg) => write!(f, "invalid system shape: {msg}"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "degree cap exceeded: reached degree {degree}, cap {cap}")
            }
            Error::NotZeroDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::InexactDivision { degree } => {
                write!(f, "inexact series division at degree {degree}")
            }
            Error::TruncationExceeded {
                requested,
                truncation,
            } => write!(
                f,
                "coefficient {requested} requested past truncation {truncation}"
            ),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
