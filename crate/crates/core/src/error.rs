use std::fmt;

/// Errors produced by validation and exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// n must be odd: even n gives a link, not a knot.
    EvenN(i64),
    /// n in {1, 3, 5} gives a torus knot; the operation requires a hyperbolic one.
    TorusN(i64),
    /// A slope cannot be built from (0, 0).
    ZeroSlope,
    /// Norm evaluation requires a nonzero peripheral class.
    ZeroClass,
    /// Slope text did not match the "P/Q" format.
    SlopeParse(String),
    /// Rational text did not match the "NUM" or "NUM/DEN" format.
    RationalParse(String),
    /// A Laurent division that was expected to be exact left a remainder.
    InexactDivision,
    /// Triangle signature entries must all be at least 1.
    InvalidSignature(i64, i64, i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EvenN(n) => write!(f, "n must be odd (got {n})"),
            Error::TorusN(n) => write!(f, "n = {n} is a torus knot; a hyperbolic n is required"),
            Error::ZeroSlope => write!(f, "slope (0, 0) is not a peripheral class"),
            Error::ZeroClass => write!(f, "norm evaluation requires a nonzero peripheral class"),
            Error::SlopeParse(s) => write!(f, "cannot parse slope {s:?}; expected \"P/Q\""),
            Error::RationalParse(s) => {
                write!(
                    f,
                    "cannot parse rational {s:?}; expected \"NUM\" or \"NUM/DEN\""
                )
            }
            Error::InexactDivision => write!(f, "Laurent division left a nonzero remainder"),
            Error::InvalidSignature(p, q, r) => {
                write!(f, "triangle signature ({p}, {q}, {r}) has an entry below 1")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
