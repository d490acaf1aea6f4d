//! Failure classification shared by the library and the CLI.
//!
//! Every fallible operation ends in one of two buckets: the input was
//! malformed or inadmissible (exit code 2), or a verified mathematical claim
//! failed on admissible input (exit code 1).

use ladder_core::Error;
use std::fmt;

/// A classified failure. `Input` maps to exit code 2, `Verify` to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Malformed or inadmissible input: parse errors, bad labels, bad
    /// parameters, structures that are not what the operation requires.
    Input(String),
    /// A verified claim failed while processing admissible input.
    Verify(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verify(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Verify(m) => m,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Verify(m) => write!(f, "verification failure: {m}"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let message = e.to_string();
        match e {
            Error::Verification { .. }
            | Error::CommutationFailure { .. }
            | Error::NoLimitObject
            | Error::NoLargestProjection { .. }
            | Error::NotDenseWithinBound { .. } => Failure::Verify(message),
            _ => Failure::Input(message),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Input(format!("invalid JSON: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(format!("io error: {e}"))
    }
}

/// Result alias over [`Failure`].
pub type LabResult<T> = Result<T, Failure>;
