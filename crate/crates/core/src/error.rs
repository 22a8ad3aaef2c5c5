//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside its admissible interval.
    Domain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    /// Structurally invalid input (bad samples, mismatched grids, ...).
    Invalid(String),
    /// A coefficient matrix failed a structural invariant (e.g. symmetry).
    InvariantViolation(String),
    /// The transform refused: the scaled principal part is not uniformly
    /// positive definite, so the strip problem would not be parabolic.
    NotUniformlyParabolic {
        min_eig: f64,
        y: f64,
        z: Vec<f64>,
    },
    /// The linear solver did not reach the requested residual.
    SolveFailed(String),
    /// A quotient against a zero forcing is undefined.
    ZeroForcing,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value, lo, hi } => {
                write!(f, "{what} = {value} outside ({lo}, {hi}]")
            }
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
            Error::NotUniformlyParabolic { min_eig, y, z } => write!(
                f,
                "scaled principal part not uniformly positive definite \
                 (min eigenvalue {min_eig:.3e} at y = {y:.6e}, z = {z:?}); \
                 transformed problem would not be uniformly parabolic"
            ),
            Error::SolveFailed(msg) => write!(f, "linear solve failed: {msg}"),
            Error::ZeroForcing => write!(f, "quotient undefined: forcing has zero norm"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64, lo: f64, hi: f64) -> Error {
    Error::Domain { what, value, lo, hi }
}
