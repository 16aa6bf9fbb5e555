use std::io;
use std::path::PathBuf;

use cheb2::chebcore::DocumentError;
use cheb2::expr::ExprError;
use cheb2::Error;
use thiserror::Error;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EXPRESSION: u8 = 3;
pub const EXIT_CONVERGENCE: u8 = 4;
pub const EXIT_VALIDATION: u8 = 5;
pub const EXIT_IO: u8 = 6;
pub const EXIT_EVALUATION: u8 = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Expr(#[from] ExprError),

    #[error(transparent)]
    Core(#[from] Error),

    #[error("{path}: {source}")]
    Document { path: PathBuf, source: DocumentError },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Expr(ExprError::Eval { .. }) => EXIT_EVALUATION,
            CliError::Expr(_) => EXIT_EXPRESSION,
            CliError::Core(Error::NoConvergence { .. }) => EXIT_CONVERGENCE,
            CliError::Core(Error::Sampling { .. } | Error::OutOfDomain { .. } | Error::PointOutsideDomain { .. }) => {
                EXIT_EVALUATION
            }
            CliError::Core(_) | CliError::Verification(_) => EXIT_VALIDATION,
            CliError::Document {
                source: DocumentError::Io(_),
                ..
            } => EXIT_IO,
            CliError::Document { .. } => EXIT_VALIDATION,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}
