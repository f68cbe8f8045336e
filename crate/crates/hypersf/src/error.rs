//! Error type shared by every numerical module.

use thiserror::Error;

/// Errors produced by the special-function and geometry routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A Gamma function (or a quantity reducing to one) was evaluated at a
    /// nonpositive integer where the limit does not exist.
    #[error("pole encountered: {0}")]
    Pole(String),

    /// A series or Gamma-quotient limit diverges for the given parameters.
    #[error("divergent: {0}")]
    Divergent(String),

    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameters are structurally invalid for the requested formula
    /// (degenerate parameter differences, wrong list shapes, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An iterative scheme hit its budget before meeting the tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// No vertical line separates the two pole families.
    #[error("pole families cannot be separated: {0}")]
    NoSeparation(String),

    /// Geometry arguments fall outside the convergence region of the
    /// closed-form surface-area series.
    #[error("out of region: {0}")]
    OutOfRegion(String),

    /// The requested evaluation path exists in theory but is not covered
    /// by this implementation.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    ///
    /// 3 = domain/region problem, 4 = numerical non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoConvergence(_) => 4,
            _ => 3,
        }
    }
}
