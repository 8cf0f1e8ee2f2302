//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inverse of zero requested.
    DivisionByZero,
    /// Matrix inverse / conjugation by a singular matrix.
    SingularMatrix,
    /// A decomposable tensor factor is zero where a nonzero one is required.
    ZeroFactor,
    /// Orbit structure requested for a decomposition that is not G-invariant.
    NotInvariant,
    /// Semiinvariants requested for a subgroup not contained in the S4 factor.
    NotInS4Factor,
    /// Unknown orbit table row id (valid ids are 1..=44).
    UnknownRow(u8),
    /// Unknown standard subgroup label.
    UnknownSubgroup(String),
    /// Wrong number of parameters for an orbit table row.
    BadParamCount { row: u8, expected: usize, got: usize },
    /// Classifier precondition violated: stabilizer order below 8.
    StabilizerTooSmall { order: usize },
    /// No orbit table row matches; would contradict the orbit classification.
    NoMatch,
    /// Row verification kept hitting degenerate parameters.
    PersistentDegeneracy { row: u8 },
    /// Sum of expected orbit lengths exceeds the allowed cap.
    CapExceeded { cap: usize, total: usize },
    /// Constraint evaluation is missing an assignment for a variable.
    MissingVariable(String),
    /// Malformed input (file formats, cycle notation, scalar strings).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::ZeroFactor => write!(f, "decomposable tensor has a zero factor"),
            Error::NotInvariant => write!(f, "decomposition is not G-invariant"),
            Error::NotInS4Factor => {
                write!(f, "subgroup is not contained in the S4 factor")
            }
            Error::UnknownRow(i) => write!(f, "unknown orbit table row {i}"),
            Error::UnknownSubgroup(s) => write!(f, "unknown standard subgroup `{s}`"),
            Error::BadParamCount { row, expected, got } => write!(
                f,
                "row {row} expects {expected} parameters, got {got}"
            ),
            Error::StabilizerTooSmall { order } => write!(
                f,
                "stabilizer order {order} is below 8; tensor is outside the catalog"
            ),
            Error::NoMatch => write!(
                f,
                "no orbit table row matches (this would contradict the classification)"
            ),
            Error::PersistentDegeneracy { row } => write!(
                f,
                "row {row}: parameters stayed degenerate after 5 draws"
            ),
            Error::CapExceeded { cap, total } => write!(
                f,
                "total expected orbit length {total} exceeds cap {cap}"
            ),
            Error::MissingVariable(v) => write!(f, "no value assigned to variable `{v}`"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
