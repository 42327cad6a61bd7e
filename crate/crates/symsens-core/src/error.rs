use alloc::string::String;
use core::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A requested `n` exceeds the cap that bounds the cost of an
    /// exhaustive operation (full-table expansion, census scans).
    Size { n: usize, cap: usize },
    /// Malformed textual input.
    Format(String),
    /// An input-vector index outside the table.
    Bounds { index: u64, len: u64 },
    /// The operation is undefined for the given argument.
    Domain(&'static str),
    /// A generating-function denominator with constant term zero has no
    /// power-series expansion.
    SingularDenominator,
    /// The power series of the rational function has non-integer
    /// coefficients, so it cannot be expanded over the integers.
    NonIntegerSeries,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Size { n, cap } => write!(f, "n = {n} exceeds the supported cap of {cap}"),
            Error::Format(msg) => write!(f, "invalid input: {msg}"),
            Error::Bounds { index, len } => {
                write!(f, "index {index} out of range for a table of {len} entries")
            }
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::SingularDenominator => write!(f, "denominator constant term is zero"),
            Error::NonIntegerSeries => write!(f, "power series coefficients are not integers"),
        }
    }
}

impl core::error::Error for Error {}
