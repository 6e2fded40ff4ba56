use std::fmt;

use fockcalc_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID_CONJUGATION: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

/// A failure carrying its process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn malformed(message: impl Into<String>) -> Self {
        CliError { code: EXIT_MALFORMED, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Format(_) | Error::InvalidNodes(_) | Error::InvalidBasis => EXIT_MALFORMED,
            Error::InvalidConjugation(_) => EXIT_INVALID_CONJUGATION,
            Error::ZeroEigenvector => EXIT_FAIL,
            Error::UnsupportedShape(_)
            | Error::CriterionNotApplicable(_)
            | Error::NotRepresentable { .. }
            | Error::NotZeroFree
            | Error::NoEigenfunction(_)
            | Error::GeneralizedEigenvector { .. } => EXIT_UNSUPPORTED,
        };
        CliError { code, message: e.to_string() }
    }
}
